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

// Brute-force reference computations for tests. Nothing here goes through
// the symbolic payoff order, the value tables or the best-response solver:
// payoffs are literal discounted sums in exact rational arithmetic and
// equilibria come from enumerating every unilateral deviation.

#ifndef MPRS_TESTS_ORACLE_HPP
#define MPRS_TESTS_ORACLE_HPP

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mprs/classic.hpp"
#include "mprs/game.hpp"
#include "mprs/valuation.hpp"

namespace mprs::oracle {

using Exact = boost::multiprecision::cpp_rational;

inline Exact to_exact(const Rational& r) { return Exact(r.numerator(), r.denominator()); }

/// Σ_t γ^t q^n(s_t) along the play, stepping the law of motion directly.
/// Plays that miss R for |V| + 1 steps never reach it.
inline Exact discounted_payoff(const Game& game, const Profile& profile, State s0, PlayerId n) {
  const Exact gamma = to_exact(game.gamma());
  Exact total = 0;
  Exact weight = 1;
  State s = s0;
  for (std::size_t t = 0; t <= game.num_vertices() + 1 && !s.is_terminal(); ++t) {
    total += weight * game.turn_payoff(n, s);
    const PlayerId mover = game.owner_of(s);
    const auto moves = game.actions(s, mover);
    const Action a = moves.front().is_trivial() ? moves.front()
                                                : Action::move(profile.choice(s.vertex()));
    s = game.transition(s, a);
    weight *= gamma;
  }
  return total;
}

inline int sign_of(const Exact& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

/// Odometer over successor choices of `vertices`, last vertex fastest.
template <typename Visit>
void for_each_assignment(const Game& game, Profile base, const std::vector<VertexId>& vertices,
                         Visit visit) {
  std::vector<std::size_t> digit(vertices.size(), 0);
  for (VertexId v : vertices) base.set_choice(v, game.successors(v)[0]);
  while (true) {
    visit(base);
    std::size_t k = vertices.size();
    bool advanced = false;
    while (k-- > 0) {
      auto succ = game.successors(vertices[k]);
      if (++digit[k] < succ.size()) {
        base.set_choice(vertices[k], succ[digit[k]]);
        advanced = true;
        break;
      }
      digit[k] = 0;
      base.set_choice(vertices[k], succ[0]);
    }
    if (!advanced) return;
  }
}

inline std::vector<VertexId> movers(const Game& game, std::optional<PlayerId> only = {}) {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    const VertexId v{i};
    if (game.in_any_target(v)) continue;
    if (only && game.owner(v) != *only) continue;
    out.push_back(v);
  }
  return out;
}

inline std::vector<Profile> all_profiles(const Game& game) {
  std::vector<Profile> out;
  for_each_assignment(game, Profile::first(game), movers(game),
                      [&](const Profile& p) { out.push_back(p); });
  return out;
}

/// Best exact payoff of n from every vertex against fixed opponents.
inline std::vector<Exact> best_values(const Game& game, const Profile& opponents, PlayerId n) {
  std::vector<Exact> best(game.num_vertices());
  bool first = true;
  for_each_assignment(game, opponents, movers(game, n), [&](const Profile& candidate) {
    for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
      const Exact value = discounted_payoff(game, candidate, State::at(VertexId{i}), n);
      if (first || value > best[i]) best[i] = value;
    }
    first = false;
  });
  return best;
}

/// No player gains from any unilateral memoryless deviation at any start.
/// With `qualitative`, only the sign of the payoff counts.
inline bool is_ne(const Game& game, const Profile& profile, bool qualitative = false) {
  for (int p = 1; p <= game.num_players(); ++p) {
    const PlayerId n{p};
    const auto best = best_values(game, profile, n);
    for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
      const Exact now = discounted_payoff(game, profile, State::at(VertexId{i}), n);
      const bool better = qualitative ? sign_of(best[i]) > sign_of(now) : best[i] > now;
      if (better) return false;
    }
  }
  return true;
}

inline std::vector<Profile> all_ne(const Game& game) {
  std::vector<Profile> out;
  for (const auto& profile : all_profiles(game)) {
    if (is_ne(game, profile)) out.push_back(profile);
  }
  return out;
}

/// Attractor by naive repetition of the closure step until nothing changes.
inline std::set<std::string> naive_attractor(const TwoPlayerArena& arena) {
  std::set<std::string> inside(arena.target.begin(), arena.target.end());
  const std::set<std::string> p1(arena.player1.begin(), arena.player1.end());
  std::set<std::string> all(arena.player1.begin(), arena.player1.end());
  all.insert(arena.player2.begin(), arena.player2.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& v : all) {
      if (inside.contains(v)) continue;
      bool any = false;
      bool every = true;
      bool has_succ = false;
      for (const auto& [from, to] : arena.edges) {
        if (from != v) continue;
        has_succ = true;
        any = any || inside.contains(to);
        every = every && inside.contains(to);
      }
      if (p1.contains(v) ? any : (has_succ && every)) {
        inside.insert(v);
        changed = true;
      }
    }
  }
  return inside;
}

}  // namespace mprs::oracle

#endif  // MPRS_TESTS_ORACLE_HPP
