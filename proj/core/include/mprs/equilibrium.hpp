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

#ifndef MPRS_EQUILIBRIUM_HPP
#define MPRS_EQUILIBRIUM_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mprs/game.hpp"
#include "mprs/payoff.hpp"
#include "mprs/valuation.hpp"

namespace mprs {

/// A state where `player` could do strictly better than under the profile.
struct Violation {
  PlayerId player;
  State state = State::terminal();
  /// The improving move at `state`, when the player owns it.
  std::optional<VertexId> better_move;
  PayoffValue achieved;
  PayoffValue available;
};

struct NEReport {
  bool is_ne = true;
  std::vector<Violation> violations;
};

/// A profile with the value tables it induces.
struct Certificate {
  Profile profile;
  ValueTable values;
};

Certificate make_certificate(const Game& game, const Profile& profile);

/// u^m(s) = q^m(s) + γ u^m(T(s, σ(s))) at every vertex and for every player.
bool consistency_holds(const Game& game, const Certificate& certificate);

/**
 * One-step test of the equilibrium equations: at every non-target state the
 * owner's chosen move must maximize q^n(s) + γ u^n(T(s, a)) over its moves.
 * Reports the best alternative move where it does not.
 *
 * Throws std::logic_error if the induced value table fails the consistency
 * equations, which would mean value_table is broken.
 */
NEReport check_certificate(const Game& game, const Profile& profile);

/// Full deviation search: no player may improve from any start state.
NEReport is_nash(const Game& game, const Profile& profile);

/// As is_nash, on the win/draw/lose payoffs in {-1, 0, 1}.
NEReport is_nash_qualitative(const Game& game, const Profile& profile);

/**
 * Visits all memoryless profiles in lexicographic order until `visit`
 * returns false. Throws TooLarge when there are more than `guard`.
 */
void for_each_profile(const Game& game, std::uint64_t guard,
                      const std::function<bool(const Profile&)>& visit);

struct EnumerationOptions {
  std::uint64_t guard = kDefaultEnumerationGuard;
  std::optional<std::size_t> limit;
  /// Worker threads; output order does not depend on this.
  unsigned threads = 1;
};

/// Equilibria among all memoryless profiles, in lexicographic order.
std::vector<Profile> enumerate_ne(const Game& game, const EnumerationOptions& options = {});

struct ProfileVerdict {
  Profile profile;
  bool is_ne;
};

/// Every profile paired with its is_nash verdict, in lexicographic order.
std::vector<ProfileVerdict> classify_profiles(const Game& game,
                                              std::uint64_t guard = kDefaultEnumerationGuard);

enum class DynamicsStatus { kConverged, kCycle, kExhausted };

struct DynamicsResult {
  DynamicsStatus status;
  Profile profile;  // final profile reached
  int rounds = 0;

  bool converged() const { return status == DynamicsStatus::kConverged; }
};

/// Rounds of sequential best-response replacement in player order. A
/// player's strategy is replaced only when the response strictly improves
/// at some state. Stops after a quiet round, a repeated profile, or
/// `max_rounds` rounds.
DynamicsResult solve_br_dynamics(const Game& game, const Profile& seed, int max_rounds);

}  // namespace mprs

#endif  // MPRS_EQUILIBRIUM_HPP
