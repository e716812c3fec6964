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

#include "core/control.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gcaa {

Vec2 control_law(const ControlLawParams& params, double epsilon) {
  const double tau = params.time_to_go;
  if (tau <= epsilon)
    throw std::domain_error("control_law: time to go is inside the singularity guard");
  const Vec2 dv = params.target_velocity - params.velocity;
  const Vec2 dp =
      params.target_position - params.position - params.target_velocity * tau;
  return dv * (4.0 / tau) + dp * (6.0 / (tau * tau));
}

double cost_to_go(const BoundaryConditions& bc) {
  const double T = bc.duration;
  if (T <= 0.0) throw std::domain_error("cost_to_go: duration must be > 0");
  const Vec2 dv = bc.end_velocity - bc.start_velocity;
  const Vec2 dp = bc.end_position - bc.start_position - bc.start_velocity * T;
  return 2.0 * dv.norm_sq() / T - 6.0 * dv.dot(dp) / (T * T) +
         6.0 * dp.norm_sq() / (T * T * T);
}

double cost_to_go_numeric(const BoundaryConditions& bc, int steps,
                          int hold_steps) {
  const double T = bc.duration;
  if (T <= 0.0) throw std::domain_error("cost_to_go_numeric: duration must be > 0");
  if (steps < hold_steps + 1)
    throw std::invalid_argument("cost_to_go_numeric: too few steps");
  const double dt = T / steps;
  AgentState state;
  state.position = bc.start_position;
  state.velocity = bc.start_velocity;
  Vec2 u;
  double cost = 0.0;
  double prev_sq = 0.0;
  for (int k = 0; k < steps; ++k) {
    const double tau = T - k * dt;
    if (k < steps - hold_steps) {
      u = control_law({state.position, state.velocity, bc.end_position,
                       bc.end_velocity, tau});
    }  // else hold the previous control through the guard window
    const double u_sq = u.norm_sq();
    if (k > 0) cost += 0.5 * (prev_sq + u_sq) * 0.5 * dt;
    else cost += 0.5 * u_sq * 0.5 * dt;  // leading half-interval
    prev_sq = u_sq;
    state = integrate_step(state, u, 0.0, dt);
  }
  cost += 0.5 * prev_sq * 0.5 * dt;  // trailing half-interval
  return cost;
}

double evaluate_cost(const BoundaryConditions& bc, const CostConfig& config) {
  if (config.backend == CostBackend::kNumeric)
    return cost_to_go_numeric(bc, config.quadrature_steps);
  return cost_to_go(bc);
}

AgentState integrate_step(const AgentState& state, Vec2 accel, double drag,
                          double dt) {
  if (!(state.position.finite() && state.velocity.finite() && accel.finite() &&
        std::isfinite(drag) && std::isfinite(dt)))
    throw std::invalid_argument("integrate_step: non-finite input");
  if (dt <= 0.0) throw std::invalid_argument("integrate_step: dt must be > 0");

  const Vec2 v = state.velocity;
  const Vec2 k1v = v;
  const Vec2 k1a = accel - v * drag;
  const Vec2 k2v = v + k1a * (dt / 2.0);
  const Vec2 k2a = accel - k2v * drag;
  const Vec2 k3v = v + k2a * (dt / 2.0);
  const Vec2 k3a = accel - k3v * drag;
  const Vec2 k4v = v + k3a * dt;
  const Vec2 k4a = accel - k4v * drag;

  AgentState next = state;
  next.position = state.position + (k1v + (k2v + k3v) * 2.0 + k4v) * (dt / 6.0);
  next.velocity = v + (k1a + (k2a + k3a) * 2.0 + k4a) * (dt / 6.0);
  return next;
}

LoiterPlan plan_loiter_entry(const AgentState& agent, const Task& task,
                             double now, int samples,
                             const CostConfig& config) {
  if (!task.loiter)
    throw std::domain_error("plan_loiter_entry: task has no loiter phase");
  const double entry_time = task.loiter_entry_time();
  const double transfer = entry_time - now;
  if (transfer <= 0.0)
    throw std::domain_error("plan_loiter_entry: entry time already passed");
  if (samples < 1)
    throw std::invalid_argument("plan_loiter_entry: samples must be >= 1");

  const double radius = task.loiter->radius;
  const double duration = task.loiter->duration;
  const double rate = duration > 0.0 ? 2.0 * std::numbers::pi / duration : 0.0;
  const double speed = rate * radius;

  LoiterPlan best;
  bool have_best = false;
  for (int k = 0; k < samples; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / samples;
    const Vec2 radial{std::cos(angle), std::sin(angle)};
    const Vec2 point = task.position + radial * radius;
    const Vec2 tangent{-radial.y, radial.x};  // counter-clockwise
    for (int dir : {1, -1}) {
      const Vec2 entry_v = tangent * (speed * dir);
      const double cost = evaluate_cost(
          {agent.position, agent.velocity, point, entry_v, transfer}, config);
      if (!have_best || cost < best.entry_cost) {
        best = {point, entry_v, entry_time, dir, rate, cost};
        have_best = true;
      }
    }
  }
  return best;
}

double loiter_phase_effort(const Task& task) {
  if (!task.loiter || task.loiter->duration <= 0.0) return 0.0;
  const double rate = 2.0 * std::numbers::pi / task.loiter->duration;
  const double centripetal = rate * rate * task.loiter->radius;
  return 0.5 * centripetal * centripetal * task.loiter->duration;
}

std::optional<double> agent_task_cost(const AgentState& agent, const Task& task,
                                      double now, int loiter_samples,
                                      const CostConfig& config) {
  if (task.loiter) {
    const double transfer = task.loiter_entry_time() - now;
    if (transfer <= config.min_duration) return std::nullopt;
    const LoiterPlan plan =
        plan_loiter_entry(agent, task, now, loiter_samples, config);
    return plan.entry_cost + loiter_phase_effort(task);
  }
  const double remaining = task.completion_time - now;
  if (remaining <= config.min_duration) return std::nullopt;
  return evaluate_cost({agent.position, agent.velocity, task.position,
                        task.terminal_velocity, remaining},
                       config);
}

}  // namespace gcaa
