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

#include "mprs/io.hpp"

#include <array>
#include <charconv>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"

namespace mprs {

using nlohmann::json;

ParseError::ParseError(const std::string& message, std::optional<int> line,
                       std::optional<int> column)
    : std::runtime_error(line ? "line " + std::to_string(*line) + ", column " +
                                    std::to_string(column.value_or(0)) + ": " + message
                              : message),
      line_(line),
      column_(column) {}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

void expect_keys(const json& object, std::string_view where,
                 std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) throw ParseError(std::string(where) + " must be an object");
  for (const auto& [key, unused] : object.items()) {
    bool known = false;
    for (auto name : allowed) known = known || key == name;
    if (!known) throw ParseError("unknown field '" + key + "' in " + std::string(where));
  }
}

const std::string& as_string(const json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + " must be a string");
  return value.get_ref<const std::string&>();
}

int as_int(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + " must be an integer");
  return value.get<int>();
}

const json& as_array(const json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + " must be an array");
  return value;
}

Rational parse_gamma(const json& value) {
  if (value.is_string()) return parse_rational(value.get_ref<const std::string&>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_number_float()) {
    std::array<char, 64> buffer{};
    auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(),
                                   value.get<double>(), std::chars_format::fixed);
    if (ec != std::errc()) throw ParseError("gamma is out of range");
    return parse_rational(std::string_view(buffer.data(), ptr - buffer.data()));
  }
  throw ParseError("gamma must be a rational string or a number");
}

ProfileChoices parse_profile(const json& value, const std::string& where) {
  if (!value.is_object()) throw ParseError(where + " must be an object");
  ProfileChoices choices;
  for (const auto& [player, moves] : value.items()) {
    const auto id = static_cast<int>(parse_int(player, "player id"));
    if (!moves.is_object()) throw ParseError(where + "." + player + " must be an object");
    auto& table = choices[id];
    for (const auto& [from, to] : moves.items()) {
      table[from] = as_string(to, where + "." + player + "." + from);
    }
  }
  return choices;
}

std::string escape_dot(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  try {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      const auto num = parse_int(text.substr(0, slash), "rational");
      const auto den = parse_int(text.substr(slash + 1), "rational");
      if (den == 0) throw ParseError("rational '" + std::string(text) + "' has a zero denominator");
      return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      const auto whole = text.substr(0, dot);
      auto fraction = text.substr(dot + 1);
      while (!fraction.empty() && fraction.back() == '0') fraction.remove_suffix(1);
      if (fraction.size() > 17) throw ParseError("decimal '" + std::string(text) + "' is too precise");
      const bool negative = !whole.empty() && whole.front() == '-';
      std::int64_t den = 1;
      for (std::size_t i = 0; i < fraction.size(); ++i) den *= 10;
      const std::int64_t int_part =
          whole.empty() || whole == "-" ? 0 : parse_int(whole, "decimal");
      const std::int64_t frac_part = fraction.empty() ? 0 : parse_int(fraction, "decimal");
      if (!fraction.empty() && (fraction.front() == '-' || fraction.front() == '+')) {
        throw ParseError("malformed decimal '" + std::string(text) + "'");
      }
      Rational value(int_part);
      value += Rational(negative ? -frac_part : frac_part, den);
      return value;
    }
    return Rational(parse_int(text, "rational"));
  } catch (const boost::bad_rational&) {
    throw ParseError("rational '" + std::string(text) + "' is out of range");
  }
}

std::string format_rational(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

RawDocument parse_raw(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    int line = 1;
    int column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string message = e.what();
    throw ParseError(message.substr(message.find(']') + 2), line, column);
  }

  expect_keys(root, "document", {"gamma", "players", "vertices", "edges", "profiles"});
  RawDocument doc;
  if (root.contains("gamma")) doc.spec.gamma = parse_gamma(root["gamma"]);

  if (root.contains("players")) {
    const auto& players = as_array(root["players"], "players");
    for (std::size_t i = 0; i < players.size(); ++i) {
      const std::string where = "players[" + std::to_string(i) + "]";
      const auto& entry = players[i];
      expect_keys(entry, where, {"id", "role", "targets"});
      if (!entry.contains("id") || !entry.contains("role")) {
        throw ParseError(where + " needs \"id\" and \"role\"");
      }
      PlayerSpec player;
      player.id = as_int(entry["id"], where + ".id");
      const auto& role = as_string(entry["role"], where + ".role");
      if (role == "reacher") {
        player.role = Role::kReacher;
      } else if (role == "avoider") {
        player.role = Role::kAvoider;
      } else {
        throw ParseError(where + ".role must be \"reacher\" or \"avoider\"");
      }
      if (entry.contains("targets")) {
        for (const auto& t : as_array(entry["targets"], where + ".targets")) {
          player.targets.push_back(as_string(t, where + ".targets[]"));
        }
      }
      doc.spec.players.push_back(std::move(player));
    }
  }

  if (root.contains("vertices")) {
    const auto& vertices = as_array(root["vertices"], "vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const std::string where = "vertices[" + std::to_string(i) + "]";
      const auto& entry = vertices[i];
      expect_keys(entry, where, {"id", "owner"});
      if (!entry.contains("id")) throw ParseError(where + " needs \"id\"");
      // A missing owner surfaces as UnownedVertex during validation.
      const int owner = entry.contains("owner") ? as_int(entry["owner"], where + ".owner") : 0;
      doc.spec.vertices.push_back({as_string(entry["id"], where + ".id"), owner});
    }
  }

  if (root.contains("edges")) {
    const auto& edges = as_array(root["edges"], "edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = "edges[" + std::to_string(i) + "]";
      const auto& edge = as_array(edges[i], where);
      if (edge.size() != 2) throw ParseError(where + " must have two endpoints");
      doc.spec.edges.emplace_back(as_string(edge[0], where + "[0]"),
                                  as_string(edge[1], where + "[1]"));
    }
  }

  if (root.contains("profiles")) {
    const auto& profiles = root["profiles"];
    if (!profiles.is_object()) throw ParseError("profiles must be an object");
    for (const auto& [name, value] : profiles.items()) {
      doc.profiles.emplace(name, parse_profile(value, "profiles." + name));
    }
  }
  return doc;
}

GameDocument parse_document(std::string_view text) {
  RawDocument raw = parse_raw(text);
  return {Game::validate(raw.spec), std::move(raw.profiles)};
}

Profile GameDocument::profile(const std::string& name) const {
  auto it = profiles.find(name);
  if (it == profiles.end()) throw std::out_of_range("no profile named '" + name + "'");
  return resolve_profile(game, it->second);
}

Profile resolve_profile(const Game& game, const ProfileChoices& choices) {
  Profile profile = Profile::first(game);
  std::set<VertexId> assigned;
  for (const auto& [player, moves] : choices) {
    if (player < 1 || player > game.num_players()) {
      throw std::invalid_argument("profile mentions unknown player " + std::to_string(player));
    }
    for (const auto& [from, to] : moves) {
      const auto v = game.find_vertex(from);
      const auto w = game.find_vertex(to);
      if (!v || !w) {
        throw std::invalid_argument("profile move " + from + " -> " + to +
                                    " uses an undeclared vertex");
      }
      if (game.owner(*v).value != player || game.in_any_target(*v)) {
        throw std::invalid_argument("player " + std::to_string(player) +
                                    " does not move at '" + from + "'");
      }
      profile.set_choice(*v, *w);
      assigned.insert(*v);
    }
  }
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    const VertexId v{i};
    if (!game.in_any_target(v) && !assigned.contains(v)) {
      throw std::invalid_argument("profile has no move for '" + game.name(v) + "'");
    }
  }
  check_profile(game, profile);
  return profile;
}

ProfileChoices describe_profile(const Game& game, const Profile& profile) {
  ProfileChoices choices;
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    const VertexId v{i};
    if (game.in_any_target(v)) continue;
    choices[game.owner(v).value][game.name(v)] = game.name(profile.choice(v));
  }
  return choices;
}

std::string emit_document(const Game& game,
                          const std::map<std::string, ProfileChoices>& profiles) {
  const GameSpec spec = game.spec();
  json root = json::object();
  root["gamma"] = format_rational(spec.gamma);

  json players = json::array();
  for (const auto& player : spec.players) {
    players.push_back({{"id", player.id},
                       {"role", std::string(to_string(player.role))},
                       {"targets", player.targets}});
  }
  root["players"] = std::move(players);

  json vertices = json::array();
  for (const auto& vertex : spec.vertices) {
    vertices.push_back({{"id", vertex.id}, {"owner", vertex.owner}});
  }
  root["vertices"] = std::move(vertices);

  json edges = json::array();
  for (const auto& [from, to] : spec.edges) edges.push_back(json::array({from, to}));
  root["edges"] = std::move(edges);

  if (!profiles.empty()) {
    json named = json::object();
    for (const auto& [name, choices] : profiles) {
      json entry = json::object();
      for (const auto& [player, moves] : choices) entry[std::to_string(player)] = moves;
      named[name] = std::move(entry);
    }
    root["profiles"] = std::move(named);
  }
  return root.dump(2) + "\n";
}

std::string emit_game(const Game& game) { return emit_document(game, {}); }

std::string export_dot(const Game& game, const Profile* profile, const ValueTable* values) {
  std::ostringstream out;
  out << "digraph mprs {\n";
  out << "  node [fontname=\"Helvetica\"];\n";
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    const VertexId v{i};
    const PlayerId owner = game.owner(v);
    std::string label = escape_dot(game.name(v)) + "\\nP" + std::to_string(owner.value);

    std::string targeted_by;
    for (int p = 1; p <= game.num_players(); ++p) {
      if (game.is_target_of(PlayerId{p}, v)) targeted_by += " P" + std::to_string(p);
    }
    if (!targeted_by.empty()) label += "\\ntarget of" + targeted_by;

    if (values != nullptr) {
      for (int p = 1; p <= game.num_players(); ++p) {
        label += "\\nu" + std::to_string(p) + " = " + to_string(values->at(PlayerId{p}, State::at(v)));
      }
    }

    out << "  \"" << escape_dot(game.name(v)) << "\" [label=\"" << label << "\", shape="
        << (game.role(owner) == Role::kReacher ? "box" : "ellipse");
    if (!targeted_by.empty()) out << ", peripheries=2";
    out << "];\n";
  }
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    const VertexId v{i};
    for (VertexId w : game.successors(v)) {
      out << "  \"" << escape_dot(game.name(v)) << "\" -> \"" << escape_dot(game.name(w)) << "\"";
      if (profile != nullptr && !game.in_any_target(v) && profile->choice(v) == w) {
        out << " [color=red, penwidth=2]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace mprs
