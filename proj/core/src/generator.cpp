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

#include "mprs/generator.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

namespace mprs {

namespace {

constexpr int kEdgeRedraws = 1000;

// std::mt19937_64 output is fixed by the standard; the distributions are
// not, so draws are derived from raw output by hand.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

std::string vertex_name(int index, int count) {
  const std::size_t width = std::to_string(count > 1 ? count - 1 : 0).size();
  std::string digits = std::to_string(index);
  return "v" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

Game random_game(const GeneratorParams& params) {
  if (params.num_players < 1) throw Infeasible("need at least one player");
  if (params.num_vertices < params.num_players) {
    throw Infeasible("need at least one vertex per player");
  }
  if (!(params.edge_density > 0.0 && params.edge_density <= 1.0)) {
    throw Infeasible("edge density must lie in (0, 1]");
  }
  if (params.targets_per_player < 1 || params.targets_per_player > params.num_vertices) {
    throw Infeasible("targets per player must lie in [1, vertices]");
  }
  if (!params.roles.empty() && static_cast<int>(params.roles.size()) != params.num_players) {
    throw Infeasible("need exactly one role per player");
  }

  Draw draw(params.seed);
  const int n = params.num_vertices;
  GameSpec spec;
  spec.gamma = params.gamma;

  // Every player owns at least one vertex.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[i] = i;
  draw.shuffle(order);
  std::vector<int> owner(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    owner[order[k]] = k < params.num_players
                          ? k + 1
                          : static_cast<int>(draw.below(params.num_players)) + 1;
  }
  for (int i = 0; i < n; ++i) spec.vertices.push_back({vertex_name(i, n), owner[i]});

  std::vector<bool> is_target(static_cast<std::size_t>(n), false);
  for (int p = 0; p < params.num_players; ++p) {
    PlayerSpec player;
    player.id = p + 1;
    player.role = params.roles.empty()
                      ? (draw.below(2) == 0 ? Role::kReacher : Role::kAvoider)
                      : params.roles[p];
    std::vector<int> pool(order);
    draw.shuffle(pool);
    pool.resize(static_cast<std::size_t>(params.targets_per_player));
    std::sort(pool.begin(), pool.end());
    for (int t : pool) {
      player.targets.push_back(vertex_name(t, n));
      is_target[t] = true;
    }
    spec.players.push_back(std::move(player));
  }

  for (int attempt = 0;; ++attempt) {
    spec.edges.clear();
    std::vector<int> out_degree(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      for (int w = 0; w < n; ++w) {
        if (draw.unit() < params.edge_density) {
          spec.edges.emplace_back(vertex_name(u, n), vertex_name(w, n));
          ++out_degree[u];
        }
      }
    }
    bool dead_end = false;
    for (int u = 0; u < n; ++u) dead_end = dead_end || (!is_target[u] && out_degree[u] == 0);
    if (!dead_end) break;
    if (attempt + 1 == kEdgeRedraws) {
      // Very sparse densities: give each dead end one random successor.
      for (int u = 0; u < n; ++u) {
        if (!is_target[u] && out_degree[u] == 0) {
          spec.edges.emplace_back(vertex_name(u, n),
                                  vertex_name(static_cast<int>(draw.below(n)), n));
        }
      }
      break;
    }
  }
  return Game::validate(spec);
}

}  // namespace mprs
