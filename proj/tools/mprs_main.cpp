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

// Command-line front end: validate, simulate, check, solve, enumerate,
// gen, export-dot and cross-check.
//
// Exit codes: 0 success / equilibrium found, 1 validation or check
// failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mprs/classic.hpp"
#include "mprs/equilibrium.hpp"
#include "mprs/game.hpp"
#include "mprs/generator.hpp"
#include "mprs/io.hpp"
#include "mprs/valuation.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::uint64_t enumeration_guard() {
  const char* raw = std::getenv("MPRS_ENUM_GUARD");
  if (raw == nullptr || *raw == '\0') return mprs::kDefaultEnumerationGuard;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0 || raw[0] == '-') {
    throw UsageError("MPRS_ENUM_GUARD must be a positive integer");
  }
  return value;
}

mprs::VertexId vertex_or_usage(const mprs::Game& game, const std::string& name) {
  auto v = game.find_vertex(name);
  if (!v) throw UsageError("unknown vertex '" + name + "'");
  return *v;
}

mprs::Profile profile_or_usage(const mprs::GameDocument& doc, const std::string& name) {
  try {
    return doc.profile(name);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
}

std::string state_name(const mprs::Game& game, mprs::State s) {
  return s.is_terminal() ? "<terminal>" : game.name(s.vertex());
}

json profile_json(const mprs::Game& game, const mprs::Profile& profile) {
  json out = json::object();
  for (const auto& [player, moves] : mprs::describe_profile(game, profile)) {
    out[std::to_string(player)] = moves;
  }
  return out;
}

json values_json(const mprs::Game& game, const mprs::ValueTable& table) {
  json out = json::object();
  for (int p = 1; p <= game.num_players(); ++p) {
    json row = json::object();
    for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
      row[game.name(mprs::VertexId{i})] =
          mprs::to_string(table.at(mprs::PlayerId{p}, mprs::State::at(mprs::VertexId{i})));
    }
    out[std::to_string(p)] = std::move(row);
  }
  return out;
}

json equilibrium_json(const mprs::Game& game, const mprs::Profile& profile) {
  return {{"profile", profile_json(game, profile)},
          {"values", values_json(game, mprs::value_table(game, profile))}};
}

void print_report(const mprs::Game& game, const mprs::NEReport& report, std::string_view title) {
  std::cout << title << ": " << (report.is_ne ? "equilibrium" : "not an equilibrium") << "\n";
  for (const auto& v : report.violations) {
    std::cout << "  P" << v.player.value << " at " << state_name(game, v.state);
    if (v.better_move) std::cout << " should move to " << game.name(*v.better_move);
    std::cout << ": achieves " << mprs::to_string(v.achieved) << ", can get "
              << mprs::to_string(v.available) << "\n";
  }
}

struct Options {
  std::string file;
  std::string profile;
  std::string start;
  std::string output;
  std::string method = "enum";
  bool qualitative = false;
  bool all = false;
  bool values = false;
  std::optional<std::size_t> limit;
  int rounds = 100;
  unsigned threads = 1;

  std::uint64_t seed = 1;
  int vertices = 4;
  int players = 2;
  double density = 0.5;
  int targets = 1;
  std::string gamma = "1/2";
  std::string roles;
};

int run_validate(const Options& opt) {
  const auto raw = mprs::parse_raw(read_file(opt.file));
  const auto issues = mprs::check_game(raw.spec);
  if (!issues.empty()) {
    for (const auto& issue : issues) {
      std::cout << mprs::to_string(issue.kind) << ": " << issue.detail << "\n";
    }
    return kFailed;
  }
  const auto game = mprs::Game::validate(raw.spec);
  std::cout << "valid: " << game.num_players() << " players, " << game.num_vertices()
            << " vertices, " << game.num_edges() << " edges, gamma "
            << mprs::format_rational(game.gamma()) << "\n";
  for (const auto& [name, choices] : raw.profiles) {
    try {
      mprs::resolve_profile(game, choices);
    } catch (const std::invalid_argument& e) {
      std::cout << "profile '" << name << "': " << e.what() << "\n";
      return kFailed;
    }
  }
  return kOk;
}

int run_simulate(const Options& opt) {
  const auto doc = mprs::parse_document(read_file(opt.file));
  const auto& game = doc.game;
  const auto profile = profile_or_usage(doc, opt.profile);
  const auto s0 = mprs::State::at(vertex_or_usage(game, opt.start));

  const auto states = mprs::play(game, profile, s0);
  std::cout << "play:";
  for (std::size_t t = 0; t < states.size(); ++t) {
    std::cout << (t == 0 ? " " : " -> ") << state_name(game, states[t]);
  }
  const auto o = mprs::outcome(game, profile, s0);
  if (o.is_never()) {
    std::cout << " (cycle)\noutcome: never reaches a target\n";
  } else {
    std::cout << "\noutcome: hits " << game.name(o.hit->vertex) << " at t=" << o.hit->time << "\n";
  }
  for (int p = 1; p <= game.num_players(); ++p) {
    const mprs::PlayerId n{p};
    const auto value = mprs::total_payoff(game, n, o);
    std::cout << "P" << p << " (" << mprs::to_string(game.role(n)) << "): " << mprs::to_string(value)
              << ", qualitative " << value.qualitative() << "\n";
  }
  return kOk;
}

int run_check(const Options& opt) {
  const auto doc = mprs::parse_document(read_file(opt.file));
  const auto profile = profile_or_usage(doc, opt.profile);
  if (opt.qualitative) {
    const auto report = mprs::is_nash_qualitative(doc.game, profile);
    print_report(doc.game, report, "qualitative");
    return report.is_ne ? kOk : kFailed;
  }
  const auto certificate = mprs::check_certificate(doc.game, profile);
  const auto deviations = mprs::is_nash(doc.game, profile);
  print_report(doc.game, certificate, "certificate");
  print_report(doc.game, deviations, "deviations");
  return certificate.is_ne && deviations.is_ne ? kOk : kFailed;
}

int run_solve(const Options& opt) {
  const auto game = mprs::parse_game(read_file(opt.file));
  mprs::EnumerationOptions enumeration;
  enumeration.guard = enumeration_guard();
  enumeration.threads = opt.threads;
  enumeration.limit = opt.all ? opt.limit : std::optional<std::size_t>(opt.limit.value_or(1));

  json out = json::object();
  out["method"] = opt.method;
  std::vector<mprs::Profile> found;
  if (opt.method == "brd") {
    const auto result = mprs::solve_br_dynamics(game, mprs::Profile::first(game), opt.rounds);
    out["rounds"] = result.rounds;
    out["converged"] = result.converged();
    if (result.converged()) {
      found.push_back(result.profile);
    } else {
      out["fallback"] = "enum";
      found = mprs::enumerate_ne(game, enumeration);
    }
  } else if (opt.method == "enum") {
    found = mprs::enumerate_ne(game, enumeration);
  } else {
    throw UsageError("unknown method '" + opt.method + "'");
  }

  json equilibria = json::array();
  for (const auto& profile : found) equilibria.push_back(equilibrium_json(game, profile));
  out["equilibria"] = std::move(equilibria);
  std::cout << out.dump(2) << "\n";
  return found.empty() ? kFailed : kOk;
}

int run_enumerate(const Options& opt) {
  const auto game = mprs::parse_game(read_file(opt.file));
  json out = json::array();
  for (const auto& verdict : mprs::classify_profiles(game, enumeration_guard())) {
    out.push_back({{"ne", verdict.is_ne}, {"profile", profile_json(game, verdict.profile)}});
  }
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int run_gen(const Options& opt) {
  mprs::GeneratorParams params;
  params.seed = opt.seed;
  params.num_vertices = opt.vertices;
  params.num_players = opt.players;
  params.edge_density = opt.density;
  params.targets_per_player = opt.targets;
  try {
    params.gamma = mprs::parse_rational(opt.gamma);
  } catch (const mprs::ParseError& e) {
    throw UsageError(e.what());
  }
  std::stringstream roles(opt.roles);
  for (std::string role; std::getline(roles, role, ',');) {
    if (role == "reacher" || role == "r") {
      params.roles.push_back(mprs::Role::kReacher);
    } else if (role == "avoider" || role == "a") {
      params.roles.push_back(mprs::Role::kAvoider);
    } else {
      throw UsageError("unknown role '" + role + "'");
    }
  }
  try {
    write_output(opt.output, mprs::emit_game(mprs::random_game(params)));
  } catch (const mprs::Infeasible& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

int run_export_dot(const Options& opt) {
  const auto doc = mprs::parse_document(read_file(opt.file));
  std::optional<mprs::Profile> profile;
  std::optional<mprs::ValueTable> table;
  if (!opt.profile.empty()) profile = profile_or_usage(doc, opt.profile);
  if (opt.values) {
    if (!profile) throw UsageError("--values needs --profile");
    table = mprs::value_table(doc.game, *profile);
  }
  write_output(opt.output, mprs::export_dot(doc.game, profile ? &*profile : nullptr,
                                            table ? &*table : nullptr));
  return kOk;
}

int run_cross_check(const Options& opt) {
  const auto game = mprs::parse_game(read_file(opt.file));
  const auto arena = mprs::arena_of(game);
  if (!arena) {
    std::cout << "cross-check needs a two-player game with one reacher, one avoider and "
                 "equal target sets\n";
    return kFailed;
  }
  const auto reach = mprs::make_reachability(*arena, game.gamma());
  mprs::EnumerationOptions enumeration;
  enumeration.guard = enumeration_guard();
  enumeration.threads = opt.threads;
  if (!opt.all) enumeration.limit = 1;

  const auto attractor = mprs::attractor(*arena);
  std::cout << "attractor:";
  for (const auto& v : attractor) std::cout << " " << v;
  std::cout << "\n";

  bool ok = true;
  for (const auto& profile : mprs::enumerate_ne(reach, enumeration)) {
    const auto report = mprs::cross_check_two_player(*arena, profile);
    std::cout << "equilibrium " << profile_json(reach, profile).dump() << ": "
              << (report.ok() ? "agrees" : "MISMATCH") << "\n";
    for (const auto& m : report.mismatches) {
      std::cout << "  " << m.vertex << ": reacher payoff " << m.reacher_payoff
                << (m.in_attractor ? ", in attractor" : ", outside attractor") << "\n";
    }
    ok = ok && report.ok();
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash equilibria of multi-player reachability/safety games"};
  app.require_subcommand(1);
  Options opt;

  auto* validate = app.add_subcommand("validate", "Check a game document");
  validate->add_option("file", opt.file)->required();

  auto* simulate = app.add_subcommand("simulate", "Unroll the play of a named profile");
  simulate->add_option("file", opt.file)->required();
  simulate->add_option("--profile", opt.profile)->required();
  simulate->add_option("--start", opt.start)->required();

  auto* check = app.add_subcommand("check", "Test whether a named profile is an equilibrium");
  check->add_option("file", opt.file)->required();
  check->add_option("--profile", opt.profile)->required();
  check->add_flag("--qualitative", opt.qualitative, "Use win/draw/lose payoffs");

  auto* solve = app.add_subcommand("solve", "Find memoryless equilibria");
  solve->add_option("file", opt.file)->required();
  solve->add_option("--method", opt.method, "enum or brd")->check(CLI::IsMember({"enum", "brd"}));
  solve->add_flag("--all", opt.all, "Report every equilibrium");
  solve->add_option("--limit", opt.limit, "At most K equilibria with --all");
  solve->add_option("--rounds", opt.rounds, "Best-response rounds for brd")
      ->check(CLI::PositiveNumber);
  solve->add_option("--threads", opt.threads, "Enumeration threads")->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List all profiles with equilibrium flags");
  enumerate->add_option("file", opt.file)->required();

  auto* gen = app.add_subcommand("gen", "Generate a random valid game");
  gen->add_option("--seed", opt.seed)->required();
  gen->add_option("--vertices", opt.vertices)->required();
  gen->add_option("--players", opt.players)->required();
  gen->add_option("--density", opt.density)->required();
  gen->add_option("--targets", opt.targets, "Targets per player");
  gen->add_option("--gamma", opt.gamma, "Discount factor as a rational");
  gen->add_option("--roles", opt.roles, "Comma-separated reacher/avoider list");
  gen->add_option("-o,--output", opt.output);

  auto* dot = app.add_subcommand("export-dot", "Render a game as Graphviz");
  dot->add_option("file", opt.file)->required();
  dot->add_option("--profile", opt.profile);
  dot->add_flag("--values", opt.values, "Annotate nodes with the profile's values");
  dot->add_option("-o,--output", opt.output);

  auto* cross = app.add_subcommand("cross-check", "Compare equilibria with the attractor");
  cross->add_option("file", opt.file)->required();
  cross->add_flag("--all", opt.all, "Check every equilibrium");
  cross->add_option("--threads", opt.threads)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return run_validate(opt);
    if (simulate->parsed()) return run_simulate(opt);
    if (check->parsed()) return run_check(opt);
    if (solve->parsed()) return run_solve(opt);
    if (enumerate->parsed()) return run_enumerate(opt);
    if (gen->parsed()) return run_gen(opt);
    if (dot->parsed()) return run_export_dot(opt);
    if (cross->parsed()) return run_cross_check(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const mprs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kFailed;
  } catch (const mprs::InvalidGame& e) {
    std::cerr << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
