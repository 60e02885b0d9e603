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

#include "mprs/valuation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace mprs {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

bool decides(const Game& game, VertexId v) { return !game.in_any_target(v); }

std::vector<VertexId> decision_vertices(const Game& game, PlayerId n) {
  std::vector<VertexId> out;
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    VertexId v{i};
    if (decides(game, v) && game.owner(v) == n) out.push_back(v);
  }
  return out;
}

// Payoffs of player n from every vertex, via memoized walks on the
// functional graph induced by the profile.
std::vector<PayoffValue> player_values(const Game& game, const Profile& profile,
                                       PlayerId n) {
  const auto hits = outcomes(game, profile);
  std::vector<PayoffValue> values;
  values.reserve(hits.size());
  for (const auto& o : hits) values.push_back(total_payoff(game, n, o));
  return values;
}

// Predecessors in the one-player graph where everybody but n is fixed.
std::vector<std::vector<VertexId>> fixed_predecessors(const Game& game,
                                                      const Profile& opponents,
                                                      PlayerId n) {
  std::vector<std::vector<VertexId>> preds(game.num_vertices());
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    VertexId u{i};
    if (!decides(game, u)) continue;
    if (game.owner(u) == n) {
      for (VertexId w : game.successors(u)) preds[w.value].push_back(u);
    } else {
      preds[opponents.choice(u).value].push_back(u);
    }
  }
  return preds;
}

std::vector<PayoffValue> reacher_values(const Game& game, const Profile& opponents,
                                        PlayerId n) {
  const auto preds = fixed_predecessors(game, opponents, n);
  std::vector<std::uint32_t> dist(game.num_vertices(), kUnreached);
  std::deque<VertexId> queue;
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    if (game.is_target_of(n, VertexId{i})) {
      dist[i] = 0;
      queue.push_back(VertexId{i});
    }
  }
  while (!queue.empty()) {
    VertexId w = queue.front();
    queue.pop_front();
    for (VertexId u : preds[w.value]) {
      if (dist[u.value] != kUnreached) continue;
      dist[u.value] = dist[w.value] + 1;
      queue.push_back(u);
    }
  }
  std::vector<PayoffValue> values(game.num_vertices());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (dist[i] != kUnreached) values[i] = PayoffValue::pos(dist[i]);
  }
  return values;
}

std::vector<PayoffValue> avoider_values(const Game& game, const Profile& opponents,
                                        PlayerId n) {
  const auto preds = fixed_predecessors(game, opponents, n);
  const std::size_t size = game.num_vertices();

  // Vertices join the forced set once all their live successors have.
  std::vector<std::uint32_t> remaining(size, 0);
  for (std::uint32_t i = 0; i < size; ++i) {
    VertexId u{i};
    if (!decides(game, u)) continue;
    remaining[i] = game.owner(u) == n ? static_cast<std::uint32_t>(game.successors(u).size()) : 1;
  }

  std::vector<std::uint32_t> delay(size, kUnreached);
  std::vector<std::uint32_t> longest(size, 0);
  std::deque<VertexId> queue;
  for (std::uint32_t i = 0; i < size; ++i) {
    if (game.is_target_of(n, VertexId{i})) {
      delay[i] = 0;
      queue.push_back(VertexId{i});
    }
  }
  while (!queue.empty()) {
    VertexId w = queue.front();
    queue.pop_front();
    for (VertexId u : preds[w.value]) {
      if (delay[u.value] != kUnreached) continue;
      longest[u.value] = std::max(longest[u.value], delay[w.value] + 1);
      if (--remaining[u.value] == 0) {
        delay[u.value] = longest[u.value];
        queue.push_back(u);
      }
    }
  }

  std::vector<PayoffValue> values(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (delay[i] != kUnreached) values[i] = PayoffValue::neg(delay[i]);
  }
  return values;
}

Strategy greedy_strategy(const Game& game, PlayerId n,
                         const std::vector<PayoffValue>& values) {
  Strategy strategy{n, {}};
  for (VertexId v : decision_vertices(game, n)) {
    auto succ = game.successors(v);
    VertexId best = succ.front();
    for (VertexId w : succ) {
      if (values[w.value] > values[best.value]) best = w;
    }
    strategy.choices.emplace_back(v, best);
  }
  return strategy;
}

}  // namespace

std::optional<VertexId> Strategy::choice(VertexId v) const {
  auto it = std::lower_bound(choices.begin(), choices.end(), v,
                             [](const auto& entry, VertexId key) { return entry.first < key; });
  if (it == choices.end() || it->first != v) return std::nullopt;
  return it->second;
}

Profile Profile::first(const Game& game) {
  Profile profile;
  profile.next_.resize(game.num_vertices());
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    VertexId v{i};
    profile.next_[i] = decides(game, v) ? game.successors(v).front() : v;
  }
  return profile;
}

Strategy Profile::strategy(const Game& game, PlayerId n) const {
  Strategy strategy{n, {}};
  for (VertexId v : decision_vertices(game, n)) strategy.choices.emplace_back(v, choice(v));
  return strategy;
}

void Profile::set_strategy(const Strategy& strategy) {
  for (const auto& [v, next] : strategy.choices) set_choice(v, next);
}

void check_profile(const Game& game, const Profile& profile) {
  if (profile.choices().size() != game.num_vertices()) {
    throw std::invalid_argument("profile size does not match the game");
  }
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    VertexId v{i};
    if (!decides(game, v)) {
      if (profile.choice(v) != v) throw std::invalid_argument("profile entry set at a target vertex");
      continue;
    }
    auto succ = game.successors(v);
    if (!std::binary_search(succ.begin(), succ.end(), profile.choice(v))) {
      throw std::invalid_argument("profile moves from '" + game.name(v) +
                                  "' along a missing arc");
    }
  }
}

std::uint64_t profile_count(const Game& game) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < game.num_vertices(); ++i) {
    if (decides(game, VertexId{i})) {
      total = saturating_mul(total, game.successors(VertexId{i}).size());
    }
  }
  return total;
}

std::uint64_t strategy_count(const Game& game, PlayerId n) {
  std::uint64_t total = 1;
  for (VertexId v : decision_vertices(game, n)) {
    total = saturating_mul(total, game.successors(v).size());
  }
  return total;
}

Play play(const Game& game, const Profile& profile, State s0) {
  Play states;
  std::vector<std::uint8_t> seen(game.num_vertices(), 0);
  State s = s0;
  while (true) {
    states.push_back(s);
    if (s.is_terminal()) break;
    seen[s.vertex().value] = 1;
    State next = game.in_any_target(s.vertex()) ? State::terminal()
                                                : State::at(profile.choice(s.vertex()));
    if (!next.is_terminal() && seen[next.vertex().value] != 0) {
      states.push_back(next);
      break;
    }
    s = next;
  }
  return states;
}

Outcome outcome(const Game& game, const Profile& profile, State s0) {
  if (s0.is_terminal()) return Outcome::never();
  const Play states = play(game, profile, s0);
  for (std::size_t t = 0; t < states.size(); ++t) {
    const State s = states[t];
    if (!s.is_terminal() && game.in_any_target(s.vertex())) {
      return Outcome::at(static_cast<std::uint32_t>(t), s.vertex());
    }
  }
  return Outcome::never();
}

PayoffValue total_payoff(const Game& game, PlayerId n, const Outcome& o) {
  if (o.is_never() || !game.is_target_of(n, o.hit->vertex)) return PayoffValue::zero();
  return game.role(n) == Role::kReacher ? PayoffValue::pos(o.hit->time)
                                        : PayoffValue::neg(o.hit->time);
}

ValueTable::ValueTable(int num_players, std::size_t num_vertices)
    : rows_(static_cast<std::size_t>(num_players), std::vector<PayoffValue>(num_vertices)) {}

std::vector<Outcome> outcomes(const Game& game, const Profile& profile) {
  const std::size_t size = game.num_vertices();
  enum : std::uint8_t { kFresh, kOnPath, kDone };
  std::vector<std::uint8_t> mark(size, kFresh);
  std::vector<Outcome> result(size);
  std::vector<VertexId> path;

  for (std::uint32_t start = 0; start < size; ++start) {
    if (mark[start] != kFresh) continue;
    path.clear();
    VertexId v{start};
    Outcome tail;
    while (true) {
      if (mark[v.value] == kDone) {
        tail = result[v.value];
        break;
      }
      if (mark[v.value] == kOnPath) {  // cycle avoiding R
        tail = Outcome::never();
        break;
      }
      mark[v.value] = kOnPath;
      path.push_back(v);
      if (game.in_any_target(v)) {
        tail = Outcome::at(0, v);
        path.pop_back();
        result[v.value] = tail;
        mark[v.value] = kDone;
        break;
      }
      v = profile.choice(v);
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (!tail.is_never()) tail.hit->time += 1;
      result[it->value] = tail;
      mark[it->value] = kDone;
    }
  }
  return result;
}

ValueTable value_table(const Game& game, const Profile& profile) {
  const auto hits = outcomes(game, profile);
  ValueTable table(game.num_players(), game.num_vertices());
  for (int p = 0; p < game.num_players(); ++p) {
    const PlayerId n = PlayerId::from_index(p);
    for (std::uint32_t i = 0; i < hits.size(); ++i) {
      table.set(n, VertexId{i}, total_payoff(game, n, hits[i]));
    }
  }
  return table;
}

BestResponse best_response(const Game& game, const Profile& opponents, PlayerId n) {
  auto values = game.role(n) == Role::kReacher ? reacher_values(game, opponents, n)
                                               : avoider_values(game, opponents, n);
  Strategy strategy = greedy_strategy(game, n, values);
  return {std::move(strategy), std::move(values)};
}

BestResponse best_response_enum(const Game& game, const Profile& opponents, PlayerId n,
                                std::uint64_t guard) {
  const auto count = strategy_count(game, n);
  if (count > guard) {
    throw TooLarge("player " + std::to_string(n.value) + " has " + std::to_string(count) +
                   " strategies, above the enumeration guard of " + std::to_string(guard));
  }
  const auto decisions = decision_vertices(game, n);

  // Odometer over successor indices; the first decision vertex is the most
  // significant digit, so strategies come out in lexicographic order.
  auto for_each_strategy = [&](auto&& visit) {
    std::vector<std::size_t> digit(decisions.size(), 0);
    Profile profile = opponents;
    for (std::size_t k = 0; k < decisions.size(); ++k) {
      profile.set_choice(decisions[k], game.successors(decisions[k]).front());
    }
    while (true) {
      if (!visit(profile)) return;
      std::size_t k = decisions.size();
      while (k > 0) {
        --k;
        auto succ = game.successors(decisions[k]);
        if (++digit[k] < succ.size()) {
          profile.set_choice(decisions[k], succ[digit[k]]);
          break;
        }
        digit[k] = 0;
        profile.set_choice(decisions[k], succ.front());
        if (k == 0) return;
      }
      if (decisions.empty()) return;
    }
  };

  std::vector<PayoffValue> best;
  for_each_strategy([&](const Profile& candidate) {
    auto values = player_values(game, candidate, n);
    if (best.empty()) {
      best = std::move(values);
    } else {
      for (std::size_t i = 0; i < best.size(); ++i) best[i] = std::max(best[i], values[i]);
    }
    return true;
  });

  std::optional<Strategy> winner;
  for_each_strategy([&](const Profile& candidate) {
    if (player_values(game, candidate, n) == best) {
      winner = candidate.strategy(game, n);
      return false;
    }
    return true;
  });
  if (!winner) {
    throw std::logic_error("no memoryless strategy attains the pointwise optimum");
  }
  return {std::move(*winner), std::move(best)};
}

}  // namespace mprs
