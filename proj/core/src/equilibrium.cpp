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

#include "mprs/equilibrium.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace mprs {

namespace {

std::vector<VertexId> all_decisions(const Game& game) {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    if (!game.in_any_target(VertexId{i})) out.push_back(VertexId{i});
  }
  return out;
}

// Sets `profile` to the index-th profile in lexicographic order.
void decode_profile(const Game& game, const std::vector<VertexId>& decisions,
                    std::uint64_t index, Profile& profile) {
  for (std::size_t k = decisions.size(); k-- > 0;) {
    auto succ = game.successors(decisions[k]);
    profile.set_choice(decisions[k], succ[index % succ.size()]);
    index /= succ.size();
  }
}

// Advances to the next profile; false after the last one.
bool next_profile(const Game& game, const std::vector<VertexId>& decisions, Profile& profile) {
  for (std::size_t k = decisions.size(); k-- > 0;) {
    auto succ = game.successors(decisions[k]);
    auto it = std::upper_bound(succ.begin(), succ.end(), profile.choice(decisions[k]));
    if (it != succ.end()) {
      profile.set_choice(decisions[k], *it);
      return true;
    }
    profile.set_choice(decisions[k], succ.front());
  }
  return false;
}

std::uint64_t guarded_count(const Game& game, std::uint64_t guard) {
  const auto count = profile_count(game);
  if (count > guard) {
    throw TooLarge("game has " + std::to_string(count) +
                   " memoryless profiles, above the enumeration guard of " +
                   std::to_string(guard));
  }
  return count;
}

template <typename Better>
NEReport deviation_search(const Game& game, const Profile& profile, Better better) {
  check_profile(game, profile);
  const ValueTable table = value_table(game, profile);
  NEReport report;
  for (int p = 0; p < game.num_players(); ++p) {
    const PlayerId n = PlayerId::from_index(p);
    const BestResponse response = best_response(game, profile, n);
    for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
      const VertexId v{i};
      const PayoffValue achieved = table.at(n, State::at(v));
      const PayoffValue available = response.values[i];
      if (!better(available, achieved)) continue;
      report.violations.push_back({n, State::at(v), response.strategy.choice(v),
                                   achieved, available});
    }
  }
  report.is_ne = report.violations.empty();
  return report;
}

}  // namespace

Certificate make_certificate(const Game& game, const Profile& profile) {
  return {profile, value_table(game, profile)};
}

bool consistency_holds(const Game& game, const Certificate& certificate) {
  for (int p = 0; p < game.num_players(); ++p) {
    const PlayerId m = PlayerId::from_index(p);
    for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
      const State s = State::at(VertexId{i});
      const Action a = game.in_any_target(s.vertex())
                           ? Action::trivial()
                           : Action::move(certificate.profile.choice(s.vertex()));
      const State next = game.transition(s, a);
      const auto q = game.turn_payoff(m, s);
      if (q != 0 && !certificate.values.at(m, next).is_zero()) return false;
      if (certificate.values.at(m, s) != bellman_step(q, certificate.values.at(m, next))) {
        return false;
      }
    }
    if (!certificate.values.at(m, State::terminal()).is_zero()) return false;
  }
  return true;
}

NEReport check_certificate(const Game& game, const Profile& profile) {
  check_profile(game, profile);
  const Certificate certificate = make_certificate(game, profile);
  if (!consistency_holds(game, certificate)) {
    throw std::logic_error("value table violates the consistency equations");
  }

  NEReport report;
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    const VertexId v{i};
    if (game.in_any_target(v)) continue;
    const PlayerId n = game.owner(v);
    const State s = State::at(v);
    const int q = game.turn_payoff(n, s);
    auto rhs = [&](VertexId move) {
      return bellman_step(q, certificate.values.at(n, game.transition(s, Action::move(move))));
    };
    const PayoffValue achieved = rhs(profile.choice(v));
    std::optional<VertexId> best_move;
    PayoffValue best = achieved;
    for (VertexId w : game.successors(v)) {
      const PayoffValue candidate = rhs(w);
      if (candidate > best) {
        best = candidate;
        best_move = w;
      }
    }
    if (best_move) report.violations.push_back({n, s, best_move, achieved, best});
  }
  report.is_ne = report.violations.empty();
  return report;
}

NEReport is_nash(const Game& game, const Profile& profile) {
  return deviation_search(game, profile,
                          [](PayoffValue available, PayoffValue achieved) {
                            return available > achieved;
                          });
}

NEReport is_nash_qualitative(const Game& game, const Profile& profile) {
  // Sign is monotone in the payoff order, so the best qualitative payoff is
  // the sign of the best quantitative one.
  NEReport report = deviation_search(game, profile,
                                     [](PayoffValue available, PayoffValue achieved) {
                                       return available.qualitative() > achieved.qualitative();
                                     });
  for (auto& violation : report.violations) {
    violation.achieved = PayoffValue::from_turn_payoff(violation.achieved.qualitative());
    violation.available = PayoffValue::from_turn_payoff(violation.available.qualitative());
  }
  return report;
}

void for_each_profile(const Game& game, std::uint64_t guard,
                      const std::function<bool(const Profile&)>& visit) {
  guarded_count(game, guard);
  const auto decisions = all_decisions(game);
  Profile profile = Profile::first(game);
  do {
    if (!visit(profile)) return;
  } while (next_profile(game, decisions, profile));
}

std::vector<Profile> enumerate_ne(const Game& game, const EnumerationOptions& options) {
  const std::uint64_t count = guarded_count(game, options.guard);
  const auto decisions = all_decisions(game);
  const std::size_t limit = options.limit.value_or(static_cast<std::size_t>(-1));
  if (limit == 0) return {};

  // Small games are not worth a thread each.
  const std::uint64_t useful = std::max<std::uint64_t>(count / 64, 1);
  const auto threads = static_cast<unsigned>(
      std::min<std::uint64_t>(std::max(options.threads, 1u), useful));
  if (threads == 1) {
    std::vector<Profile> found;
    Profile profile = Profile::first(game);
    do {
      if (is_nash(game, profile).is_ne) {
        found.push_back(profile);
        if (found.size() >= limit) break;
      }
    } while (next_profile(game, decisions, profile));
    return found;
  }

  // Contiguous index ranges per worker, concatenated in order afterwards.
  std::vector<std::vector<Profile>> partial(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        const std::uint64_t begin = count * w / threads;
        const std::uint64_t end = count * (w + 1) / threads;
        Profile profile = Profile::first(game);
        decode_profile(game, decisions, begin, profile);
        for (std::uint64_t index = begin; index < end; ++index) {
          if (is_nash(game, profile).is_ne) {
            partial[w].push_back(profile);
            if (partial[w].size() >= limit) break;
          }
          next_profile(game, decisions, profile);
        }
      });
    }
  }
  std::vector<Profile> found;
  for (auto& chunk : partial) {
    for (auto& profile : chunk) {
      if (found.size() >= limit) return found;
      found.push_back(std::move(profile));
    }
  }
  return found;
}

std::vector<ProfileVerdict> classify_profiles(const Game& game, std::uint64_t guard) {
  std::vector<ProfileVerdict> verdicts;
  for_each_profile(game, guard, [&](const Profile& profile) {
    verdicts.push_back({profile, is_nash(game, profile).is_ne});
    return true;
  });
  return verdicts;
}

DynamicsResult solve_br_dynamics(const Game& game, const Profile& seed, int max_rounds) {
  check_profile(game, seed);
  Profile current = seed;
  std::set<Profile> visited{current};
  for (int round = 1; round <= max_rounds; ++round) {
    bool improved = false;
    for (int p = 0; p < game.num_players(); ++p) {
      const PlayerId n = PlayerId::from_index(p);
      const ValueTable table = value_table(game, current);
      const BestResponse response = best_response(game, current, n);
      const auto row = table.row(n);
      if (std::equal(row.begin(), row.end(), response.values.begin(),
                     [](PayoffValue now, PayoffValue best) { return !(best > now); })) {
        continue;
      }
      current.set_strategy(response.strategy);
      improved = true;
    }
    if (!improved) return {DynamicsStatus::kConverged, current, round};
    if (!visited.insert(current).second) return {DynamicsStatus::kCycle, current, round};
  }
  return {DynamicsStatus::kExhausted, current, max_rounds};
}

}  // namespace mprs
