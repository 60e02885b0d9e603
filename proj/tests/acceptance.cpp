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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_run.hpp"
#include "fixtures.hpp"
#include "mprs/classic.hpp"
#include "mprs/equilibrium.hpp"
#include "mprs/io.hpp"
#include "oracle.hpp"

namespace {

using namespace mprs;
using testing::make_profile;

constexpr int kEnsembleSize = 500;
constexpr int kGammaGames = 120;
constexpr int kOracleTriples = 600;
constexpr int kArenas = 250;

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail, double seconds) {
  std::printf("%s criterion %d (%s): %s [%.2fs]\n", pass ? "PASS" : "FAIL", id, name,
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Seeds 1..500 cover N in {2,3}, |V| in 3..6, four densities, one or two
// targets per player, and random roles.
std::vector<Game> ensemble(int size, std::uint64_t first_seed) {
  std::vector<Game> games;
  for (int i = 0; i < size; ++i) games.push_back(testing::small_random_game(first_seed + i));
  return games;
}

struct EnsembleResults {
  std::vector<std::vector<Profile>> equilibria;
  double seconds = 0;
};

EnsembleResults criterion_existence(const std::vector<Game>& games) {
  Timer timer;
  EnsembleResults results;
  int nonempty = 0;
  for (const auto& game : games) {
    results.equilibria.push_back(enumerate_ne(game));
    nonempty += results.equilibria.back().empty() ? 0 : 1;
  }
  results.seconds = timer.seconds();
  std::ostringstream detail;
  detail << nonempty << "/" << games.size() << " games have a memoryless NE";
  report(1, "existence", nonempty == static_cast<int>(games.size()) && results.seconds < 120,
         detail.str(), results.seconds);
  return results;
}

void criterion_certificate(const std::vector<Game>& games) {
  Timer timer;
  std::uint64_t profiles = 0;
  std::uint64_t disagreements = 0;
  for (const auto& game : games) {
    for_each_profile(game, kDefaultEnumerationGuard, [&](const Profile& profile) {
      ++profiles;
      if (check_certificate(game, profile).is_ne != is_nash(game, profile).is_ne) ++disagreements;
      return true;
    });
  }
  std::ostringstream detail;
  detail << disagreements << " disagreements over " << profiles << " profiles";
  report(2, "certificate equivalence", disagreements == 0 && profiles > 0, detail.str(),
         timer.seconds());
}

void criterion_corollary(const std::vector<Game>& games, const EnsembleResults& results) {
  Timer timer;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  for (std::size_t i = 0; i < games.size(); ++i) {
    for (const auto& profile : results.equilibria[i]) {
      ++checked;
      if (!is_nash_qualitative(games[i], profile).is_ne) ++failed;
    }
  }
  std::ostringstream detail;
  detail << failed << " failures over " << checked << " quantitative NE";
  report(3, "corollary", failed == 0 && checked > 0, detail.str(), timer.seconds());
}

void criterion_gamma() {
  Timer timer;
  int differing = 0;
  for (const auto& game : ensemble(kGammaGames, 5001)) {
    if (enumerate_ne(game.with_gamma(Rational(3, 10))) !=
        enumerate_ne(game.with_gamma(Rational(9, 10)))) {
      ++differing;
    }
  }
  std::ostringstream detail;
  detail << differing << "/" << kGammaGames << " games differ between gamma 3/10 and 9/10";
  report(4, "gamma invariance", differing == 0, detail.str(), timer.seconds());
}

void criterion_oracle() {
  Timer timer;
  std::mt19937_64 rng(20261016);
  int triples = 0;
  int mismatches = 0;
  std::uint64_t seed = 9001;
  while (triples < kOracleTriples) {
    const Game game = testing::small_random_game(seed++);
    // Opponent-fixing profile drawn uniformly per vertex.
    Profile profile = Profile::first(game);
    for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
      const VertexId v{i};
      if (game.in_any_target(v)) continue;
      const auto succ = game.successors(v);
      profile.set_choice(v, succ[rng() % succ.size()]);
    }
    for (int p = 1; p <= game.num_players(); ++p) {
      const PlayerId n{p};
      if (best_response(game, profile, n).values != best_response_enum(game, profile, n).values) {
        ++mismatches;
      }
      ++triples;
    }
  }
  std::ostringstream detail;
  detail << mismatches << " mismatches over " << triples << " (game, profile, player) triples";
  report(5, "oracle agreement", mismatches == 0, detail.str(), timer.seconds());
}

void criterion_attractor() {
  Timer timer;
  int arenas = 0;
  int checked = 0;
  int mismatched = 0;
  for (std::uint64_t seed = 1; arenas < kArenas; ++seed, ++arenas) {
    const auto arena = testing::random_arena(seed);
    const auto equilibria = enumerate_ne(make_reachability(arena));
    if (equilibria.empty()) ++mismatched;
    for (const auto& profile : equilibria) {
      ++checked;
      if (!cross_check_two_player(arena, profile).ok()) ++mismatched;
    }
  }
  std::ostringstream detail;
  detail << mismatched << " mismatching NE over " << checked << " NE in " << arenas << " arenas";
  report(6, "attractor cross-check", mismatched == 0, detail.str(), timer.seconds());
}

void criterion_worked_games() {
  Timer timer;
  bool ok = true;
  std::ostringstream detail;

  const Game g1 = testing::g1();
  const Profile hat = make_profile(g1, {{"v1", "v3"}, {"v2", "v1"}});
  const auto ne1 = enumerate_ne(g1);
  const auto values1 = value_table(g1, hat);
  const State v1 = testing::at(g1, "v1");
  ok = ok && ne1 == std::vector{hat} && oracle::all_ne(g1) == ne1;
  ok = ok && values1.at(PlayerId{1}, v1) == PayoffValue::pos(1) &&
       values1.at(PlayerId{2}, v1) == PayoffValue::neg(1);
  detail << "G1 NE " << (ok ? "v1->v3, v2->v1 with (+γ^1, -γ^1)" : "wrong");

  const Game g2 = testing::g2();
  const Profile loop = make_profile(g2, {{"w1", "w1"}});
  const auto ne2 = enumerate_ne(g2);
  const auto values2 = value_table(g2, loop);
  const State w1 = testing::at(g2, "w1");
  const bool ok2 = ne2 == std::vector{loop} && oracle::all_ne(g2) == ne2 &&
                   values2.at(PlayerId{1}, w1).is_zero() && values2.at(PlayerId{2}, w1).is_zero();
  detail << "; G2 NE " << (ok2 ? "w1->w1 with (0, 0)" : "wrong");
  report(7, "worked micro-games", ok && ok2, detail.str(), timer.seconds());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void criterion_determinism() {
  Timer timer;
  const auto dir = std::filesystem::temp_directory_path() / "mprs_acceptance";
  std::filesystem::create_directories(dir);
  int runs = 0;
  int differing = 0;
  int failed = 0;
  for (std::uint64_t seed : {1u, 7u, 42u, 1234u, 99991u}) {
    const std::string gen = "gen --seed " + std::to_string(seed) +
                            " --vertices 6 --players 3 --density 0.45";
    const auto a = testing::run_cli(gen);
    const auto b = testing::run_cli(gen);
    ++runs;
    if (a.exit_code != 0 || b.exit_code != 0 || a.out.empty()) ++failed;
    if (a.out != b.out) ++differing;

    const auto file = dir / ("seed" + std::to_string(seed) + ".json");
    std::ofstream(file, std::ios::binary) << a.out;
    for (const char* method : {"enum --all", "brd"}) {
      const std::string solve =
          "solve \"" + file.string() + "\" --method " + method + " --threads 4";
      const auto x = testing::run_cli(solve);
      const auto y = testing::run_cli(solve);
      ++runs;
      if (x.out.empty() || y.out.empty()) ++failed;
      if (x.out != y.out) ++differing;
    }
  }
  std::ostringstream detail;
  detail << differing << " differing and " << failed << " failed out of " << runs
         << " repeated gen/solve runs";
  report(8, "determinism", differing == 0 && failed == 0, detail.str(), timer.seconds());
}

}  // namespace

int main() {
  const auto games = ensemble(kEnsembleSize, 1);
  const auto results = criterion_existence(games);
  criterion_certificate(games);
  criterion_corollary(games, results);
  criterion_gamma();
  criterion_oracle();
  criterion_attractor();
  criterion_worked_games();
  criterion_determinism();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
