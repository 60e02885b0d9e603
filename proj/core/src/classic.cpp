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

#include "mprs/classic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace mprs {

namespace {

Game two_player(const TwoPlayerArena& arena, Role first, Role second, Rational gamma) {
  GameSpec spec;
  spec.gamma = gamma;
  spec.players = {{1, first, arena.target}, {2, second, arena.target}};
  for (const auto& v : arena.player1) spec.vertices.push_back({v, 1});
  for (const auto& v : arena.player2) spec.vertices.push_back({v, 2});
  spec.edges = arena.edges;
  return Game::validate(spec);
}

Game all_same_role(const OwnedGraph& graph, const std::vector<std::vector<std::string>>& targets,
                   Role role) {
  GameSpec spec;
  spec.gamma = graph.gamma;
  for (std::size_t p = 0; p < targets.size(); ++p) {
    spec.players.push_back({static_cast<int>(p + 1), role, targets[p]});
  }
  spec.vertices = graph.vertices;
  spec.edges = graph.edges;
  return Game::validate(spec);
}

}  // namespace

TwoPlayerArena swap_owners(TwoPlayerArena arena) {
  std::swap(arena.player1, arena.player2);
  return arena;
}

Game make_reachability(const TwoPlayerArena& arena, Rational gamma) {
  return two_player(arena, Role::kReacher, Role::kAvoider, gamma);
}

Game make_safety(const TwoPlayerArena& arena, Rational gamma) {
  return two_player(arena, Role::kAvoider, Role::kReacher, gamma);
}

Game make_sias(const OwnedGraph& graph, const std::vector<std::vector<std::string>>& targets) {
  return all_same_role(graph, targets, Role::kAvoider);
}

Game make_ras(const OwnedGraph& graph, const std::vector<std::vector<std::string>>& targets) {
  return all_same_role(graph, targets, Role::kReacher);
}

std::vector<std::string> attractor(const TwoPlayerArena& arena) {
  std::set<std::string> reacher_owned(arena.player1.begin(), arena.player1.end());
  std::set<std::pair<std::string, std::string>> edges(arena.edges.begin(), arena.edges.end());

  std::map<std::string, std::vector<std::string>> preds;
  std::map<std::string, std::size_t> pending;  // successors not yet attracted
  for (const auto& [from, to] : edges) {
    preds[to].push_back(from);
    ++pending[from];
  }

  std::set<std::string> attracted;
  std::deque<std::string> worklist;
  std::vector<std::string> seeds(arena.target);
  std::sort(seeds.begin(), seeds.end());
  for (const auto& t : seeds) {
    if (attracted.insert(t).second) worklist.push_back(t);
  }
  while (!worklist.empty()) {
    const std::string w = worklist.front();
    worklist.pop_front();
    for (const auto& u : preds[w]) {
      if (attracted.contains(u)) continue;
      const bool joins = reacher_owned.contains(u) || --pending[u] == 0;
      if (joins) {
        attracted.insert(u);
        worklist.push_back(u);
      }
    }
  }
  return {attracted.begin(), attracted.end()};
}

std::optional<TwoPlayerArena> arena_of(const Game& game) {
  if (game.num_players() != 2) return std::nullopt;
  const PlayerId p1{1};
  const PlayerId p2{2};
  if (game.role(p1) == game.role(p2)) return std::nullopt;

  TwoPlayerArena arena;
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    const VertexId v{i};
    if (game.is_target_of(p1, v) != game.is_target_of(p2, v)) return std::nullopt;
    if (game.is_target_of(p1, v)) arena.target.push_back(game.name(v));
    (game.owner(v) == p1 ? arena.player1 : arena.player2).push_back(game.name(v));
    for (VertexId w : game.successors(v)) arena.edges.emplace_back(game.name(v), game.name(w));
  }
  if (game.role(p1) == Role::kAvoider) arena = swap_owners(std::move(arena));
  return arena;
}

CrossCheckReport cross_check_two_player(const TwoPlayerArena& arena, const Profile& equilibrium) {
  const Game game = make_reachability(arena);
  check_profile(game, equilibrium);

  CrossCheckReport report{equilibrium, attractor(arena), {}};
  const std::set<std::string> winning(report.attractor.begin(), report.attractor.end());
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    const VertexId v{i};
    const int payoff = qualitative_payoff(game, PlayerId{1}, outcome(game, equilibrium, State::at(v)));
    const bool in_attractor = winning.contains(game.name(v));
    if ((payoff == 1) != in_attractor) {
      report.mismatches.push_back({game.name(v), payoff, in_attractor});
    }
  }
  return report;
}

CrossCheckReport cross_check_two_player(const TwoPlayerArena& arena,
                                        const EnumerationOptions& options) {
  const Game game = make_reachability(arena);
  EnumerationOptions first = options;
  first.limit = 1;
  const auto equilibria = enumerate_ne(game, first);
  if (equilibria.empty()) {
    throw std::logic_error("no memoryless equilibrium found");
  }
  return cross_check_two_player(arena, equilibria.front());
}

}  // namespace mprs
