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

#ifndef MPRS_GAME_HPP
#define MPRS_GAME_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace mprs {

using Rational = boost::rational<std::int64_t>;

enum class Role { kReacher, kAvoider };

std::string_view to_string(Role role);

/// 1-based player number, as used in game documents.
struct PlayerId {
  int value = 1;

  constexpr int index() const { return value - 1; }
  static constexpr PlayerId from_index(int i) { return PlayerId{i + 1}; }

  friend constexpr auto operator<=>(PlayerId, PlayerId) = default;
};

/// Dense vertex index. Indices follow the lexicographic order of the
/// vertex names, so comparing ids compares names.
struct VertexId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// Either a vertex of the graph or the absorbing terminal state.
class State {
 public:
  static constexpr State terminal() { return State(kTerminal); }
  static constexpr State at(VertexId v) { return State(v.value); }

  constexpr bool is_terminal() const { return raw_ == kTerminal; }
  constexpr VertexId vertex() const { return VertexId{raw_}; }

  friend constexpr auto operator<=>(State, State) = default;

 private:
  static constexpr std::uint32_t kTerminal =
      std::numeric_limits<std::uint32_t>::max();

  constexpr explicit State(std::uint32_t raw) : raw_(raw) {}

  std::uint32_t raw_;
};

/// A player's action: the trivial move, or moving the token to a vertex.
class Action {
 public:
  static constexpr Action trivial() { return Action(kTrivial); }
  static constexpr Action move(VertexId v) { return Action(v.value); }

  constexpr bool is_trivial() const { return raw_ == kTrivial; }
  constexpr VertexId target() const { return VertexId{raw_}; }

  friend constexpr auto operator<=>(Action, Action) = default;

 private:
  static constexpr std::uint32_t kTrivial =
      std::numeric_limits<std::uint32_t>::max();

  constexpr explicit Action(std::uint32_t raw) : raw_(raw) {}

  std::uint32_t raw_;
};

struct PlayerSpec {
  int id = 1;
  Role role = Role::kReacher;
  std::vector<std::string> targets;
};

struct VertexSpec {
  std::string id;
  int owner = 1;
};

/// Unvalidated game description, as read from a document or built by hand.
struct GameSpec {
  std::vector<PlayerSpec> players;
  std::vector<VertexSpec> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  Rational gamma{1, 2};
};

enum class IssueKind {
  kDanglingEdge,
  kUnownedVertex,
  kEmptyTargetSet,
  kDeadEnd,
  kBadGamma,
  kDuplicateVertex,
  kBadPlayerIds,
  kUnknownTarget,
};

std::string_view to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string detail;
};

/// Every well-formedness violation of `spec`, in a stable order. Empty iff
/// the spec describes a valid game.
std::vector<ValidationIssue> check_game(const GameSpec& spec);

class InvalidGame : public std::runtime_error {
 public:
  explicit InvalidGame(std::vector<ValidationIssue> issues);

  const std::vector<ValidationIssue>& issues() const { return issues_; }
  bool has(IssueKind kind) const;

 private:
  std::vector<ValidationIssue> issues_;
};

/// Raised when a caller feeds `transition` an action its owner cannot take.
class IllegalAction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/**
 * A validated multi-player reachability/safety game.
 *
 * Immutable after construction. Vertices are renumbered in lexicographic
 * order of their names, successor lists are sorted and deduplicated.
 * Out-arcs of target vertices are kept (they round-trip through documents)
 * but play no role in the semantics.
 */
class Game {
 public:
  /// Throws InvalidGame carrying the complete issue list.
  static Game validate(const GameSpec& spec);

  int num_players() const { return static_cast<int>(roles_.size()); }
  std::size_t num_vertices() const { return names_.size(); }
  const Rational& gamma() const { return gamma_; }

  Role role(PlayerId n) const { return roles_[n.index()]; }
  const std::string& name(VertexId v) const { return names_[v.value]; }
  std::optional<VertexId> find_vertex(std::string_view name) const;

  std::span<const VertexId> successors(VertexId v) const {
    return successors_[v.value];
  }
  PlayerId owner(VertexId v) const { return owners_[v.value]; }

  /// v ∈ R_n.
  bool is_target_of(PlayerId n, VertexId v) const {
    return targets_[n.index()][v.value] != 0;
  }
  /// v ∈ R, the union of all target sets.
  bool in_any_target(VertexId v) const { return any_target_[v.value] != 0; }

  /// Number of arcs after deduplication.
  std::size_t num_edges() const;

  /// The terminal state belongs to player 1.
  PlayerId owner_of(State s) const;

  /// Successor moves when `n` owns the non-target vertex `s`, else {trivial}.
  std::vector<Action> actions(State s, PlayerId n) const;

  /// Deterministic law of motion. Throws IllegalAction when `a` is not
  /// available to the owner of `s`.
  State transition(State s, Action a) const;

  /// +1 / -1 on the player's own targets (reacher / avoider), else 0.
  int turn_payoff(PlayerId n, State s) const;

  /// Canonical description: players by id, vertices and edges sorted.
  GameSpec spec() const;

  /// Same game with a different discount factor.
  Game with_gamma(const Rational& gamma) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  Game() = default;

  std::vector<Role> roles_;
  std::vector<std::string> names_;
  std::vector<std::vector<VertexId>> successors_;
  std::vector<PlayerId> owners_;
  std::vector<std::vector<std::uint8_t>> targets_;
  std::vector<std::uint8_t> any_target_;
  Rational gamma_{1, 2};
};

inline Game validate_game(const GameSpec& spec) { return Game::validate(spec); }

}  // namespace mprs

#endif  // MPRS_GAME_HPP
