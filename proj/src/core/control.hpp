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

#ifndef GCAA_CORE_CONTROL_HPP
#define GCAA_CORE_CONTROL_HPP

#include <optional>

#include "core/model.hpp"
#include "core/vec2.hpp"

namespace gcaa {

// Two-point boundary value data for the minimum-effort transfer.
struct BoundaryConditions {
  Vec2 start_position;
  Vec2 start_velocity;
  Vec2 end_position;
  Vec2 end_velocity;
  double duration = 0.0;  // > 0
};

struct ControlLawParams {
  Vec2 position;
  Vec2 velocity;
  Vec2 target_position;
  Vec2 target_velocity;
  double time_to_go = 0.0;  // terminal time minus current time
};

// Minimum-effort feedback acceleration
//   u = 4/tau * (v_T - v) + 6/tau^2 * (p_T - p - v_T * tau),  tau = time_to_go.
// Throws std::domain_error once time_to_go <= epsilon; the caller is expected
// to hold its last control inside the guard window.
Vec2 control_law(const ControlLawParams& params, double epsilon = 0.0);

// Closed-form minimum control effort (1/2) int |u*|^2 dt for the cubic
// minimum-effort trajectory through the boundary conditions. Nonnegative;
// zero exactly when zero control already satisfies them.
double cost_to_go(const BoundaryConditions& bc);

// Same quantity by quadrature: integrates the closed-loop feedback law with
// fixed-step RK4 and accumulates |u|^2 by the trapezoid rule. The control is
// held over the final `hold_steps` steps to avoid the feedback singularity.
// Kept as an independent check of the closed form and as the slow cost
// backend.
double cost_to_go_numeric(const BoundaryConditions& bc, int steps,
                          int hold_steps = 2);

enum class CostBackend { kClosedForm, kNumeric };

struct CostConfig {
  CostBackend backend = CostBackend::kClosedForm;
  int quadrature_steps = 1000;  // per numeric cost evaluation
  double min_duration = 1e-9;   // below this a transfer counts as infeasible
};

double evaluate_cost(const BoundaryConditions& bc, const CostConfig& config);

// One fixed RK4 step of p' = v, v' = accel - drag * v with the acceleration
// held constant over the step. Throws std::invalid_argument on non-finite
// inputs.
AgentState integrate_step(const AgentState& state, Vec2 accel, double drag,
                          double dt);

struct LoiterPlan {
  Vec2 entry_point;        // on the loiter circle
  Vec2 entry_velocity;     // tangential, one full loop in the loiter duration
  double entry_time = 0.0; // absolute: completion_time - loiter duration
  int angular_direction = 1;  // +1 counter-clockwise, -1 clockwise
  double angular_rate = 0.0;  // 2*pi / duration (unsigned)
  double entry_cost = 0.0;    // transfer cost from the agent state
};

// Evaluates the transfer cost to `samples` equally spaced points on the
// loiter circle (both loop directions, tangential entry velocity) and returns
// the cheapest. Ties keep the lowest sample index, counter-clockwise first.
// Throws std::domain_error if the task has no loiter phase or `now` is at or
// past the entry time.
LoiterPlan plan_loiter_entry(const AgentState& agent, const Task& task,
                             double now, int samples,
                             const CostConfig& config = {});

// Control effort spent tracking the circle for one loop (ideal circular
// motion, drag not compensated).
double loiter_phase_effort(const Task& task);

// Cost-to-go for the agent to satisfy the task's terminal constraint from
// `now`: the direct transfer for fixed tasks, entry transfer plus loop effort
// for loiter tasks. Empty when the deadline is no longer reachable.
std::optional<double> agent_task_cost(const AgentState& agent, const Task& task,
                                      double now, int loiter_samples,
                                      const CostConfig& config = {});

}  // namespace gcaa

#endif  // GCAA_CORE_CONTROL_HPP
