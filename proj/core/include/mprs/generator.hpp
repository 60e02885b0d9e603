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

#ifndef MPRS_GENERATOR_HPP
#define MPRS_GENERATOR_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mprs/game.hpp"

namespace mprs {

class Infeasible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeneratorParams {
  int num_players = 2;
  int num_vertices = 4;
  /// Probability of each ordered pair (self-loops included) being an arc.
  double edge_density = 0.5;
  /// One role per player; empty draws a random role for each.
  std::vector<Role> roles;
  int targets_per_player = 1;
  std::uint64_t seed = 1;
  Rational gamma{1, 2};
};

/**
 * Random valid game, a pure function of `params` on every platform.
 *
 * Every player owns at least one vertex and gets `targets_per_player`
 * distinct targets. Arc sets leaving a non-target vertex without successor
 * are redrawn. Throws Infeasible for unusable parameters.
 */
Game random_game(const GeneratorParams& params);

}  // namespace mprs

#endif  // MPRS_GENERATOR_HPP
