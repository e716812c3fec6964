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

#include "core/scenario_gen.hpp"

#include <stdexcept>

#include "core/rng.hpp"

namespace gcaa {

namespace {

// True when task j is a loiter task: n_loiter indices spread evenly over p.
bool loiter_index(int j, int n_loiter, int p) {
  const long long a = static_cast<long long>(j + 1) * n_loiter / p;
  const long long b = static_cast<long long>(j) * n_loiter / p;
  return a > b;
}

}  // namespace

Scenario generate_random_scenario(const GenerateParams& params,
                                  std::uint64_t seed) {
  if (params.n_agents < 1 || params.n_tasks < 1)
    throw std::invalid_argument("generate: need at least one agent and one task");
  if (params.n_loiter < 0 || params.n_loiter > params.n_tasks)
    throw std::invalid_argument("generate: n_loiter must lie in [0, n_tasks]");
  if (params.horizon <= 0.0 || params.steps < 1)
    throw std::invalid_argument("generate: horizon must be > 0 and steps >= 1");

  Rng rng(substream_seed(seed, "scenario-gen"));
  Scenario s;
  s.comm_range = params.comm_range;
  s.drag = params.drag;
  s.horizon = params.horizon;
  s.steps = params.steps;
  s.freeze_radius_factor = params.freeze_radius_factor;
  s.fixed_freeze_radius = params.fixed_freeze_radius;
  s.loiter_samples = params.loiter_samples;

  s.agents.resize(params.n_agents);
  for (int i = 0; i < params.n_agents; ++i) {
    s.agents[i].id = i;
    s.agents[i].position = {rng.uniform(), rng.uniform()};
    s.agents[i].velocity = {0.0, 0.0};
  }

  s.tasks.resize(params.n_tasks);
  s.success_prob.resize(static_cast<std::size_t>(params.n_agents) *
                        params.n_tasks);
  for (int j = 0; j < params.n_tasks; ++j) {
    Task& t = s.tasks[j];
    t.id = j;
    t.lambda = params.lambda;
    t.position = {rng.uniform(), rng.uniform()};
    t.completion_time = params.horizon * rng.uniform(0.9, 1.0);
    if (loiter_index(j, params.n_loiter, params.n_tasks)) {
      LoiterSpec loiter;
      loiter.radius = rng.uniform(0.032, 0.048);
      loiter.duration = params.horizon * rng.uniform(0.15, 0.25);
      t.loiter = loiter;
      t.terminal_velocity = {0.0, 0.0};
      t.nominal_reward = rng.uniform(0.0, 1.0);
    } else {
      t.terminal_velocity = {rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1)};
      t.nominal_reward = rng.uniform(0.0, 0.2);
    }
    for (int i = 0; i < params.n_agents; ++i)
      s.success_prob[static_cast<std::size_t>(i) * params.n_tasks + j] =
          rng.uniform();
  }
  validate(s);
  return s;
}

}  // namespace gcaa
