// Copyright 2026 The MPRS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MPRS_VALUATION_HPP
#define MPRS_VALUATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mprs/game.hpp"
#include "mprs/payoff.hpp"

namespace mprs {

inline constexpr std::uint64_t kDefaultEnumerationGuard = 1'000'000;

/// Thrown when an exhaustive enumeration would exceed its guard.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Memoryless strategy of one player: a successor for each of the player's
/// non-target vertices, sorted by vertex.
struct Strategy {
  PlayerId player;
  std::vector<std::pair<VertexId, VertexId>> choices;

  std::optional<VertexId> choice(VertexId v) const;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

/**
 * Deterministic memoryless profile, stored as one successor per vertex.
 *
 * Entries at target vertices are unused and pinned to the vertex itself so
 * that equal profiles compare equal. The defaulted ordering is the
 * enumeration order: lexicographic over vertices, smallest vertex most
 * significant.
 */
class Profile {
 public:
  /// Every owner picks its smallest successor.
  static Profile first(const Game& game);

  VertexId choice(VertexId v) const { return next_[v.value]; }
  void set_choice(VertexId v, VertexId next) { next_[v.value] = next; }

  Strategy strategy(const Game& game, PlayerId n) const;
  void set_strategy(const Strategy& strategy);

  std::span<const VertexId> choices() const { return next_; }

  friend auto operator<=>(const Profile&, const Profile&) = default;

 private:
  std::vector<VertexId> next_;
};

/// Throws std::invalid_argument unless every non-target choice is an arc.
void check_profile(const Game& game, const Profile& profile);

/// Number of memoryless profiles, saturating at UINT64_MAX.
std::uint64_t profile_count(const Game& game);
/// Number of memoryless strategies of player n, saturating at UINT64_MAX.
std::uint64_t strategy_count(const Game& game, PlayerId n);

using Play = std::vector<State>;

struct Hit {
  std::uint32_t time = 0;
  VertexId vertex;

  friend bool operator==(const Hit&, const Hit&) = default;
};

/// First entrance into R, or Never.
struct Outcome {
  std::optional<Hit> hit;

  static Outcome never() { return {}; }
  static Outcome at(std::uint32_t time, VertexId v) { return {Hit{time, v}}; }
  bool is_never() const { return !hit.has_value(); }

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Unrolls the play from s0 until it reaches Terminal or repeats a state.
Play play(const Game& game, const Profile& profile, State s0);

Outcome outcome(const Game& game, const Profile& profile, State s0);

PayoffValue total_payoff(const Game& game, PlayerId n, const Outcome& o);

inline int qualitative_payoff(const Game& game, PlayerId n, const Outcome& o) {
  return total_payoff(game, n, o).qualitative();
}

/// u(n, s) for every player and state. u(n, Terminal) is Zero.
class ValueTable {
 public:
  ValueTable() = default;
  ValueTable(int num_players, std::size_t num_vertices);

  PayoffValue at(PlayerId n, State s) const {
    return s.is_terminal() ? PayoffValue::zero() : rows_[n.index()][s.vertex().value];
  }
  void set(PlayerId n, VertexId v, PayoffValue value) { rows_[n.index()][v.value] = value; }

  std::span<const PayoffValue> row(PlayerId n) const { return rows_[n.index()]; }
  int num_players() const { return static_cast<int>(rows_.size()); }

  friend bool operator==(const ValueTable&, const ValueTable&) = default;

 private:
  std::vector<std::vector<PayoffValue>> rows_;
};

/// Outcome from every vertex, indexed by vertex.
std::vector<Outcome> outcomes(const Game& game, const Profile& profile);

ValueTable value_table(const Game& game, const Profile& profile);

struct BestResponse {
  Strategy strategy;
  /// Optimal value for the responding player, indexed by vertex.
  std::vector<PayoffValue> values;
};

/**
 * Memoryless strategy of `n` that is optimal from every start state at
 * once, against the other players' choices in `opponents` (player n's own
 * entries are ignored). Ties go to the smallest successor.
 *
 * Reachers minimize the distance to R_n; avoiders first secure Zero
 * wherever the opponents cannot force R_n, then delay the forced hit.
 */
BestResponse best_response(const Game& game, const Profile& opponents, PlayerId n);

/// Exhaustive oracle for best_response. Throws TooLarge when player n has
/// more than `guard` strategies.
BestResponse best_response_enum(const Game& game, const Profile& opponents, PlayerId n,
                                std::uint64_t guard = kDefaultEnumerationGuard);

}  // namespace mprs

#endif  // MPRS_VALUATION_HPP
