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

#include "mprs/game.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mprs {

std::string_view to_string(Role role) {
  return role == Role::kReacher ? "reacher" : "avoider";
}

std::string_view to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::kDanglingEdge: return "DanglingEdge";
    case IssueKind::kUnownedVertex: return "UnownedVertex";
    case IssueKind::kEmptyTargetSet: return "EmptyTargetSet";
    case IssueKind::kDeadEnd: return "DeadEnd";
    case IssueKind::kBadGamma: return "BadGamma";
    case IssueKind::kDuplicateVertex: return "DuplicateVertex";
    case IssueKind::kBadPlayerIds: return "BadPlayerIds";
    case IssueKind::kUnknownTarget: return "UnknownTarget";
  }
  return "?";
}

namespace {

std::string describe(const std::vector<ValidationIssue>& issues) {
  std::ostringstream out;
  out << "invalid game:";
  for (const auto& issue : issues) {
    out << "\n  " << to_string(issue.kind) << ": " << issue.detail;
  }
  return out.str();
}

}  // namespace

InvalidGame::InvalidGame(std::vector<ValidationIssue> issues)
    : std::runtime_error(describe(issues)), issues_(std::move(issues)) {}

bool InvalidGame::has(IssueKind kind) const {
  return std::any_of(issues_.begin(), issues_.end(),
                     [kind](const auto& issue) { return issue.kind == kind; });
}

std::vector<ValidationIssue> check_game(const GameSpec& spec) {
  std::vector<ValidationIssue> issues;
  auto report = [&issues](IssueKind kind, std::string detail) {
    issues.push_back({kind, std::move(detail)});
  };

  // Player ids must be exactly 1..N.
  std::set<int> ids;
  for (const auto& player : spec.players) ids.insert(player.id);
  const int n_players = static_cast<int>(spec.players.size());
  if (n_players == 0) {
    report(IssueKind::kBadPlayerIds, "no players declared");
  } else if (static_cast<int>(ids.size()) != n_players || *ids.begin() != 1 ||
             *ids.rbegin() != n_players) {
    report(IssueKind::kBadPlayerIds,
           "player ids must be exactly 1.." + std::to_string(n_players));
  }

  std::map<std::string, int> owner;
  for (const auto& vertex : spec.vertices) {
    if (!owner.emplace(vertex.id, vertex.owner).second) {
      report(IssueKind::kDuplicateVertex, "vertex '" + vertex.id + "' declared twice");
    }
    if (!ids.contains(vertex.owner)) {
      report(IssueKind::kUnownedVertex,
             "vertex '" + vertex.id + "' has owner " + std::to_string(vertex.owner) +
                 ", which is not a declared player");
    }
  }

  std::map<std::string, int> out_degree;
  for (const auto& [from, to] : spec.edges) {
    bool ok = true;
    for (const auto* end : {&from, &to}) {
      if (!owner.contains(*end)) {
        report(IssueKind::kDanglingEdge,
               "edge (" + from + ", " + to + ") uses undeclared vertex '" + *end + "'");
        ok = false;
        break;
      }
    }
    if (ok) ++out_degree[from];
  }

  std::set<std::string> all_targets;
  for (const auto& player : spec.players) {
    if (player.targets.empty()) {
      report(IssueKind::kEmptyTargetSet,
             "player " + std::to_string(player.id) + " has an empty target set");
    }
    for (const auto& t : player.targets) {
      if (!owner.contains(t)) {
        report(IssueKind::kUnknownTarget, "player " + std::to_string(player.id) +
                                              " targets undeclared vertex '" + t + "'");
      } else {
        all_targets.insert(t);
      }
    }
  }

  for (const auto& [name, unused] : owner) {
    if (!all_targets.contains(name) && !out_degree.contains(name)) {
      report(IssueKind::kDeadEnd, "non-target vertex '" + name + "' has no successor");
    }
  }

  if (!(spec.gamma > 0 && spec.gamma < 1)) {
    std::ostringstream out;
    out << "discount factor " << spec.gamma << " is not in (0,1)";
    report(IssueKind::kBadGamma, out.str());
  }
  return issues;
}

Game Game::validate(const GameSpec& spec) {
  if (auto issues = check_game(spec); !issues.empty()) {
    throw InvalidGame(std::move(issues));
  }

  Game game;
  game.gamma_ = spec.gamma;

  std::map<std::string, int> owner;
  for (const auto& vertex : spec.vertices) owner.emplace(vertex.id, vertex.owner);
  std::map<std::string, std::uint32_t> index;
  for (const auto& [name, player] : owner) {
    index.emplace(name, static_cast<std::uint32_t>(game.names_.size()));
    game.names_.push_back(name);
    game.owners_.push_back(PlayerId{player});
  }

  const std::size_t n_vertices = game.names_.size();
  game.successors_.resize(n_vertices);
  for (const auto& [from, to] : spec.edges) {
    game.successors_[index.at(from)].push_back(VertexId{index.at(to)});
  }
  for (auto& succ : game.successors_) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }

  const auto n_players = spec.players.size();
  game.roles_.resize(n_players);
  game.targets_.assign(n_players, std::vector<std::uint8_t>(n_vertices, 0));
  game.any_target_.assign(n_vertices, 0);
  for (const auto& player : spec.players) {
    const auto p = static_cast<std::size_t>(player.id - 1);
    game.roles_[p] = player.role;
    for (const auto& t : player.targets) {
      game.targets_[p][index.at(t)] = 1;
      game.any_target_[index.at(t)] = 1;
    }
  }
  return game;
}

std::optional<VertexId> Game::find_vertex(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return VertexId{static_cast<std::uint32_t>(it - names_.begin())};
}

std::size_t Game::num_edges() const {
  std::size_t total = 0;
  for (const auto& succ : successors_) total += succ.size();
  return total;
}

PlayerId Game::owner_of(State s) const {
  return s.is_terminal() ? PlayerId{1} : owner(s.vertex());
}

std::vector<Action> Game::actions(State s, PlayerId n) const {
  if (s.is_terminal() || in_any_target(s.vertex()) || owner(s.vertex()) != n) {
    return {Action::trivial()};
  }
  std::vector<Action> moves;
  for (VertexId next : successors(s.vertex())) moves.push_back(Action::move(next));
  return moves;
}

State Game::transition(State s, Action a) const {
  if (s.is_terminal() || in_any_target(s.vertex())) {
    if (!a.is_trivial()) {
      throw IllegalAction("only the trivial move is available at target or terminal states");
    }
    return State::terminal();
  }
  if (a.is_trivial()) {
    throw IllegalAction("the owner of '" + name(s.vertex()) + "' must move the token");
  }
  auto succ = successors(s.vertex());
  if (!std::binary_search(succ.begin(), succ.end(), a.target())) {
    throw IllegalAction("no arc from '" + name(s.vertex()) + "' to vertex #" +
                        std::to_string(a.target().value));
  }
  return State::at(a.target());
}

int Game::turn_payoff(PlayerId n, State s) const {
  if (s.is_terminal() || !is_target_of(n, s.vertex())) return 0;
  return role(n) == Role::kReacher ? 1 : -1;
}

GameSpec Game::spec() const {
  GameSpec spec;
  spec.gamma = gamma_;
  for (int p = 0; p < num_players(); ++p) {
    PlayerSpec player{p + 1, roles_[p], {}};
    for (std::size_t v = 0; v < num_vertices(); ++v) {
      if (targets_[p][v] != 0) player.targets.push_back(names_[v]);
    }
    spec.players.push_back(std::move(player));
  }
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    spec.vertices.push_back({names_[v], owners_[v].value});
    for (VertexId next : successors_[v]) spec.edges.emplace_back(names_[v], names_[next.value]);
  }
  return spec;
}

Game Game::with_gamma(const Rational& gamma) const {
  if (!(gamma > 0 && gamma < 1)) {
    std::ostringstream out;
    out << "discount factor " << gamma << " is not in (0,1)";
    throw InvalidGame({{IssueKind::kBadGamma, out.str()}});
  }
  Game copy = *this;
  copy.gamma_ = gamma;
  return copy;
}

}  // namespace mprs
