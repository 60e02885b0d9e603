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

#ifndef MPRS_IO_HPP
#define MPRS_IO_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mprs/game.hpp"
#include "mprs/valuation.hpp"

namespace mprs {

/// Malformed document. Line and column are 1-based and set for syntax
/// errors only.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::optional<int> line = {},
             std::optional<int> column = {});

  std::optional<int> line() const { return line_; }
  std::optional<int> column() const { return column_; }

 private:
  std::optional<int> line_;
  std::optional<int> column_;
};

/// Profile as written in documents: player id -> (vertex -> successor).
using ProfileChoices = std::map<int, std::map<std::string, std::string>>;

struct RawDocument {
  GameSpec spec;
  std::map<std::string, ProfileChoices> profiles;
};

struct GameDocument {
  Game game;
  std::map<std::string, ProfileChoices> profiles;

  /// Throws std::out_of_range for an unknown name, std::invalid_argument
  /// for a profile that does not fit the game.
  Profile profile(const std::string& name) const;
};

/**
 * Reads the JSON game schema:
 *
 *   {"gamma": "1/2",
 *    "players": [{"id": 1, "role": "reacher", "targets": ["v3"]}],
 *    "vertices": [{"id": "v1", "owner": 1}],
 *    "edges": [["v1", "v2"]],
 *    "profiles": {"name": {"1": {"v1": "v3"}}}}
 *
 * Unknown fields are rejected. "gamma" defaults to "1/2" and may also be a
 * JSON number or decimal string; "targets" defaults to empty.
 * Throws ParseError.
 */
RawDocument parse_raw(std::string_view text);

/// parse_raw followed by validation. Throws ParseError or InvalidGame.
GameDocument parse_document(std::string_view text);

inline Game parse_game(std::string_view text) { return parse_document(text).game; }

/// Parses "3/10", "7", "0.3". Throws ParseError.
Rational parse_rational(std::string_view text);

/// "num/den" in lowest terms; integers are written without a denominator.
std::string format_rational(const Rational& value);

Profile resolve_profile(const Game& game, const ProfileChoices& choices);
ProfileChoices describe_profile(const Game& game, const Profile& profile);

/// Canonical text: sorted keys, sorted vertices and edges, two-space indent.
std::string emit_game(const Game& game);
std::string emit_document(const Game& game, const std::map<std::string, ProfileChoices>& profiles);

/// Graphviz rendering. Box nodes are owned by reachers, ellipses by
/// avoiders; target vertices get a double border. Profile arcs are drawn
/// bold red; values are appended to node labels.
std::string export_dot(const Game& game, const Profile* profile = nullptr,
                       const ValueTable* values = nullptr);

}  // namespace mprs

#endif  // MPRS_IO_HPP
