// Copyright 2026 The Authors.
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

#ifndef GCAA_CORE_SCENARIO_GEN_HPP
#define GCAA_CORE_SCENARIO_GEN_HPP

#include <cstdint>
#include <optional>

#include "core/model.hpp"

namespace gcaa {

struct GenerateParams {
  int n_agents = 10;
  int n_tasks = 10;
  int n_loiter = 5;
  std::optional<double> comm_range;  // empty = unlimited
  double horizon = 10.0;
  int steps = 1000;
  double drag = 0.1;
  double lambda = 1.0;
  double freeze_radius_factor = 2.0;
  double fixed_freeze_radius = 0.05;
  int loiter_samples = 10;
};

// Samples a scenario: agent and task positions uniform in the unit square,
// agents starting at rest, completion times in [0.9, 1] of the horizon,
// fixed-task terminal velocity components in [-0.1, 0.1], loiter radii in
// [0.032, 0.048] and loiter durations in [0.15, 0.25] of the horizon, nominal
// rewards in [0, 0.2] for fixed and [0, 1] for loiter tasks, success
// probabilities uniform in [0, 1]. All draws come from one generator seeded
// from `seed`; identical inputs give identical scenarios. Loiter tasks are
// spread evenly across task indices, and each task's draws (parameters, then
// its success-probability column) are consumed in index order so that task
// prefixes are stable when only n_tasks grows.
Scenario generate_random_scenario(const GenerateParams& params,
                                  std::uint64_t seed);

}  // namespace gcaa

#endif  // GCAA_CORE_SCENARIO_GEN_HPP
