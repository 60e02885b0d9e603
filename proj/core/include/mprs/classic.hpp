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

#ifndef MPRS_CLASSIC_HPP
#define MPRS_CLASSIC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mprs/equilibrium.hpp"
#include "mprs/game.hpp"

namespace mprs {

/**
 * Two-player arena with a single target set.
 *
 * `player1` vertices are moved by P1, `player2` vertices by P2. In the
 * reachability view P1 is the reacher; in the safety view the roles are
 * swapped while ownership stays put.
 */
struct TwoPlayerArena {
  std::vector<std::string> player1;
  std::vector<std::string> player2;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> target;
};

/// Same arena with the vertex ownership exchanged.
TwoPlayerArena swap_owners(TwoPlayerArena arena);

/// Graph with arbitrary ownership, for the multi-player special cases.
struct OwnedGraph {
  std::vector<VertexSpec> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  Rational gamma{1, 2};
};

/// P1 reacher, P2 avoider, R1 = R2 = target. Throws InvalidGame.
Game make_reachability(const TwoPlayerArena& arena, Rational gamma = {1, 2});

/// P1 avoider, P2 reacher, R1 = R2 = target. Throws InvalidGame.
Game make_safety(const TwoPlayerArena& arena, Rational gamma = {1, 2});

/// Stay-in-a-set: every player avoids its own target set.
Game make_sias(const OwnedGraph& graph, const std::vector<std::vector<std::string>>& targets);

/// Reach-a-set: every player tries to reach its own target set.
Game make_ras(const OwnedGraph& graph, const std::vector<std::vector<std::string>>& targets);

/// Vertices from which P1 can force the token into the target, sorted by
/// name. Worklist fixpoint with successor counting; O(|V| + |E|).
std::vector<std::string> attractor(const TwoPlayerArena& arena);

/// Recovers the arena of a two-player game with R1 = R2 (either view).
std::optional<TwoPlayerArena> arena_of(const Game& game);

struct CrossCheckMismatch {
  std::string vertex;
  int reacher_payoff;
  bool in_attractor;
};

struct CrossCheckReport {
  Profile equilibrium;
  std::vector<std::string> attractor;
  std::vector<CrossCheckMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Compares the reacher's qualitative payoff under `equilibrium` of
/// make_reachability(arena) with attractor membership at every vertex.
CrossCheckReport cross_check_two_player(const TwoPlayerArena& arena, const Profile& equilibrium);

/// As above with the first equilibrium returned by enumerate_ne.
CrossCheckReport cross_check_two_player(const TwoPlayerArena& arena,
                                        const EnumerationOptions& options = {});

}  // namespace mprs

#endif  // MPRS_CLASSIC_HPP
