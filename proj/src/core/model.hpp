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

#ifndef GCAA_CORE_MODEL_HPP
#define GCAA_CORE_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "core/vec2.hpp"

namespace gcaa {

// One agent's kinematic state. A passive agent carries the task index its
// assignment was frozen to; that index never changes afterwards.
struct AgentState {
  int id = 0;
  Vec2 position;
  Vec2 velocity;
  std::optional<int> frozen_task;  // empty = active

  bool passive() const { return frozen_task.has_value(); }
};

struct LoiterSpec {
  double radius = 0.0;    // circle radius around the target
  double duration = 0.0;  // time spent on the circle, ends at completion_time
};

struct Task {
  int id = 0;
  Vec2 position;
  Vec2 terminal_velocity;         // required arrival velocity (fixed tasks)
  double nominal_reward = 0.0;    // >= 0
  double completion_time = 0.0;   // > 0, absolute
  double lambda = 1.0;            // cost-to-reward conversion, > 0
  std::optional<LoiterSpec> loiter;

  bool is_loiter() const { return loiter.has_value(); }
  // Time at which a loitering agent must be on the circle.
  double loiter_entry_time() const {
    return completion_time - (loiter ? loiter->duration : 0.0);
  }
};

// Either a task index or the null assignment.
using Assignment = std::optional<int>;

struct AllocationProfile {
  std::vector<Assignment> assignments;

  int size() const { return static_cast<int>(assignments.size()); }
  bool operator==(const AllocationProfile&) const = default;
};

struct Scenario {
  std::vector<AgentState> agents;
  std::vector<Task> tasks;
  // Row-major n x p success probabilities, entries in [0, 1].
  std::vector<double> success_prob;
  std::optional<double> comm_range;  // empty = unlimited
  double drag = 0.1;
  double horizon = 10.0;
  int steps = 1000;
  double freeze_radius_factor = 2.0;  // loiter freeze radius = factor * radius
  double fixed_freeze_radius = 0.05;  // freeze radius for fixed tasks
  int loiter_samples = 10;

  int num_agents() const { return static_cast<int>(agents.size()); }
  int num_tasks() const { return static_cast<int>(tasks.size()); }
  double prob(int agent, int task) const {
    return success_prob[static_cast<std::size_t>(agent) * tasks.size() + task];
  }
  double dt() const { return horizon / steps; }
};

// Throws std::invalid_argument naming the offending field if any scenario
// invariant is violated.
void validate(const Scenario& s);

// Per-(agent, task) cost-to-go table. An empty entry means the pair was
// either not evaluated or is infeasible; utility code that needs the entry
// treats a missing one as a contract violation.
class CostTable {
 public:
  CostTable() = default;
  CostTable(int n_agents, int n_tasks)
      : n_tasks_(n_tasks),
        cells_(static_cast<std::size_t>(n_agents) * n_tasks) {}

  std::optional<double>& at(int agent, int task) {
    return cells_[static_cast<std::size_t>(agent) * n_tasks_ + task];
  }
  const std::optional<double>& at(int agent, int task) const {
    return cells_[static_cast<std::size_t>(agent) * n_tasks_ + task];
  }

 private:
  int n_tasks_ = 0;
  std::vector<std::optional<double>> cells_;
};

// Agents assigned to `task` under `profile`, ascending. Null assignments
// appear in no coalition. Throws std::out_of_range on a bad task index.
std::vector<int> coalition(const AllocationProfile& profile, int task,
                           int num_tasks);

// Expected reward of the task's coalition: nominal reward times the
// probability that at least one assigned agent completes the task.
double expected_reward(const Scenario& s, const AllocationProfile& profile,
                       int task);

// Sum of the coalition members' cost-to-go. Throws std::logic_error if a
// member's cost entry is missing.
double task_completion_cost(const Scenario& s, const AllocationProfile& profile,
                            int task, const CostTable& costs);

// Expected reward minus lambda-weighted completion cost; may be negative.
double task_utility(const Scenario& s, const AllocationProfile& profile,
                    int task, const CostTable& costs);

// Sum of task utilities over all tasks.
double global_utility(const Scenario& s, const AllocationProfile& profile,
                      const CostTable& costs);

// Marginal contribution of one agent: global utility of the profile minus
// the global utility with that agent's assignment nulled out. Zero for an
// agent already on the null assignment.
double marginal_utility(const Scenario& s, const AllocationProfile& profile,
                        int agent, const CostTable& costs);

}  // namespace gcaa

#endif  // GCAA_CORE_MODEL_HPP
