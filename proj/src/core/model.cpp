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

#include "core/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gcaa {

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw std::invalid_argument(field + ": " + what);
}

}  // namespace

void validate(const Scenario& s) {
  const int n = s.num_agents();
  const int p = s.num_tasks();
  require(n >= 1, "agents", "at least one agent required");
  for (int i = 0; i < n; ++i) {
    const AgentState& a = s.agents[i];
    const std::string f = "agents[" + std::to_string(i) + "]";
    require(a.position.finite() && a.velocity.finite(), f,
            "position and velocity must be finite");
    if (a.frozen_task)
      require(*a.frozen_task >= 0 && *a.frozen_task < p, f + ".frozen_task",
              "must index an existing task");
  }
  for (int j = 0; j < p; ++j) {
    const Task& t = s.tasks[j];
    const std::string f = "tasks[" + std::to_string(j) + "]";
    require(t.position.finite() && t.terminal_velocity.finite(), f,
            "state must be finite");
    require(t.nominal_reward >= 0.0, f + ".reward", "must be >= 0");
    require(t.completion_time > 0.0, f + ".completion_time", "must be > 0");
    require(t.lambda > 0.0, f + ".lambda", "must be > 0");
    if (t.loiter) {
      require(t.loiter->radius > 0.0, f + ".loiter.radius", "must be > 0");
      require(t.loiter->duration >= 0.0 &&
                  t.loiter->duration <= t.completion_time,
              f + ".loiter.duration", "must lie in [0, completion_time]");
    }
  }
  require(s.success_prob.size() ==
              static_cast<std::size_t>(n) * static_cast<std::size_t>(p),
          "success_prob", "dimensions must match agents x tasks");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j) {
      const double q = s.prob(i, j);
      require(q >= 0.0 && q <= 1.0,
              "success_prob[" + std::to_string(i) + "][" + std::to_string(j) +
                  "]",
              "must lie in [0, 1]");
    }
  if (s.comm_range)
    require(*s.comm_range > 0.0, "comm_range", "must be > 0 or unlimited");
  require(s.drag >= 0.0, "drag", "must be >= 0");
  require(s.horizon > 0.0, "horizon", "must be > 0");
  require(s.steps >= 1, "steps", "must be >= 1");
  require(s.freeze_radius_factor > 0.0, "freeze_radius_factor", "must be > 0");
  require(s.fixed_freeze_radius > 0.0, "fixed_freeze_radius", "must be > 0");
  require(s.loiter_samples >= 1, "loiter_samples", "must be >= 1");
}

std::vector<int> coalition(const AllocationProfile& profile, int task,
                           int num_tasks) {
  if (task < 0 || task >= num_tasks)
    throw std::out_of_range("coalition: task index " + std::to_string(task) +
                            " out of range");
  std::vector<int> members;
  for (int i = 0; i < profile.size(); ++i)
    if (profile.assignments[i] && *profile.assignments[i] == task)
      members.push_back(i);
  return members;
}

double expected_reward(const Scenario& s, const AllocationProfile& profile,
                       int task) {
  double miss = 1.0;
  bool empty = true;
  for (int i = 0; i < profile.size(); ++i) {
    if (profile.assignments[i] && *profile.assignments[i] == task) {
      miss *= 1.0 - s.prob(i, task);
      empty = false;
    }
  }
  if (task < 0 || task >= s.num_tasks())
    throw std::out_of_range("expected_reward: task index out of range");
  if (empty) return 0.0;
  return s.tasks[task].nominal_reward * (1.0 - miss);
}

double task_completion_cost(const Scenario& s, const AllocationProfile& profile,
                            int task, const CostTable& costs) {
  double total = 0.0;
  for (int i : coalition(profile, task, s.num_tasks())) {
    const std::optional<double>& c = costs.at(i, task);
    if (!c)
      throw std::logic_error("task_completion_cost: missing cost entry for agent " +
                             std::to_string(i) + ", task " + std::to_string(task));
    total += *c;
  }
  return total;
}

double task_utility(const Scenario& s, const AllocationProfile& profile,
                    int task, const CostTable& costs) {
  const double reward = expected_reward(s, profile, task);
  const double cost = task_completion_cost(s, profile, task, costs);
  return reward - s.tasks[task].lambda * cost;
}

double global_utility(const Scenario& s, const AllocationProfile& profile,
                      const CostTable& costs) {
  double total = 0.0;
  for (int j = 0; j < s.num_tasks(); ++j)
    total += task_utility(s, profile, j, costs);
  return total;
}

double marginal_utility(const Scenario& s, const AllocationProfile& profile,
                        int agent, const CostTable& costs) {
  if (agent < 0 || agent >= profile.size())
    throw std::out_of_range("marginal_utility: agent index out of range");
  const Assignment& a = profile.assignments[agent];
  if (!a) return 0.0;
  // Terms for every other task cancel in the difference, so only the agent's
  // own task is evaluated.
  AllocationProfile without = profile;
  without.assignments[agent] = std::nullopt;
  return task_utility(s, profile, *a, costs) -
         task_utility(s, without, *a, costs);
}

}  // namespace gcaa
