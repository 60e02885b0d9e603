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

#ifndef MPRS_TESTS_FIXTURES_HPP
#define MPRS_TESTS_FIXTURES_HPP

#include <cstdint>
#include <initializer_list>
#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mprs/classic.hpp"
#include "mprs/game.hpp"
#include "mprs/generator.hpp"
#include "mprs/valuation.hpp"

namespace mprs::testing {

// v1 (P1) -> v2, v3; v2 (P2) -> v1; v3 (P2) is the shared target.
// P1 reaches, P2 avoids.
inline GameSpec g1_spec() {
  GameSpec spec;
  spec.players = {{1, Role::kReacher, {"v3"}}, {2, Role::kAvoider, {"v3"}}};
  spec.vertices = {{"v1", 1}, {"v2", 2}, {"v3", 2}};
  spec.edges = {{"v1", "v2"}, {"v1", "v3"}, {"v2", "v1"}};
  spec.gamma = Rational(1, 2);
  return spec;
}

// w1 (P1) loops or exits to w2 (P2). P1 avoids w2, P2 reaches it.
inline GameSpec g2_spec() {
  GameSpec spec;
  spec.players = {{1, Role::kAvoider, {"w2"}}, {2, Role::kReacher, {"w2"}}};
  spec.vertices = {{"w1", 1}, {"w2", 2}};
  spec.edges = {{"w1", "w1"}, {"w1", "w2"}};
  spec.gamma = Rational(1, 2);
  return spec;
}

inline Game g1() { return Game::validate(g1_spec()); }
inline Game g2() { return Game::validate(g2_spec()); }

inline TwoPlayerArena g1_arena() {
  return {{"v1"}, {"v2", "v3"}, {{"v1", "v2"}, {"v1", "v3"}, {"v2", "v1"}}, {"v3"}};
}

// Chain v1 -> v2 -> v3 with v2 able to escape back to v1.
inline TwoPlayerArena g3_arena() {
  return {{"v1"}, {"v2", "v3"}, {{"v1", "v2"}, {"v2", "v3"}, {"v2", "v1"}}, {"v3"}};
}

inline VertexId vid(const Game& game, const std::string& name) {
  return game.find_vertex(name).value();
}

inline State at(const Game& game, const std::string& name) {
  return State::at(vid(game, name));
}

/// Profile from (vertex, successor) name pairs; unspecified vertices keep
/// their smallest successor.
inline Profile make_profile(const Game& game,
                            std::initializer_list<std::pair<const char*, const char*>> moves) {
  Profile profile = Profile::first(game);
  for (const auto& [from, to] : moves) profile.set_choice(vid(game, from), vid(game, to));
  check_profile(game, profile);
  return profile;
}

/// Small random game in the acceptance ensemble's range.
inline Game small_random_game(std::uint64_t seed, int min_players = 2, int max_players = 3,
                              int min_vertices = 3, int max_vertices = 6) {
  GeneratorParams params;
  params.seed = seed;
  params.num_players = min_players + static_cast<int>(seed % (max_players - min_players + 1));
  params.num_vertices =
      min_vertices + static_cast<int>((seed / 7) % (max_vertices - min_vertices + 1));
  if (params.num_vertices < params.num_players) params.num_vertices = params.num_players;
  static constexpr double kDensities[] = {0.3, 0.45, 0.6, 0.8};
  params.edge_density = kDensities[(seed / 3) % 4];
  params.targets_per_player = std::min(1 + static_cast<int>((seed / 5) % 2), params.num_vertices);
  return random_game(params);
}

/// Random two-player arena: ownership and arcs from a generated game, target
/// drawn from the seed.
inline TwoPlayerArena random_arena(std::uint64_t seed, int min_vertices = 3,
                                   int max_vertices = 6) {
  GeneratorParams params;
  params.seed = seed;
  params.num_players = 2;
  params.num_vertices = min_vertices + static_cast<int>(seed % (max_vertices - min_vertices + 1));
  static constexpr double kDensities[] = {0.3, 0.5, 0.7};
  params.edge_density = kDensities[(seed / 5) % 3];
  const Game game = random_game(params);
  TwoPlayerArena arena;
  std::uint64_t bits = seed * 0x9E3779B97F4A7C15ull;
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    const VertexId v{i};
    (game.owner(v) == PlayerId{1} ? arena.player1 : arena.player2).push_back(game.name(v));
    for (VertexId w : game.successors(v)) arena.edges.emplace_back(game.name(v), game.name(w));
    if ((bits >> (i * 3 + 7)) % 3 == 0) arena.target.push_back(game.name(v));
  }
  if (arena.target.empty()) arena.target.push_back(game.name(VertexId{0}));
  // Sinks of the generated game must stay targets.
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    const auto& name = game.name(VertexId{i});
    if (game.successors(VertexId{i}).empty() &&
        std::find(arena.target.begin(), arena.target.end(), name) == arena.target.end()) {
      arena.target.push_back(name);
    }
  }
  return arena;
}

}  // namespace mprs::testing

#endif  // MPRS_TESTS_FIXTURES_HPP
