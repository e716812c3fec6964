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

#include "core/simulator.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gcaa {

namespace {

std::vector<Vec2> positions_of(const std::vector<AgentState>& agents) {
  std::vector<Vec2> out;
  out.reserve(agents.size());
  for (const AgentState& a : agents) out.push_back(a.position);
  return out;
}

// Control applied by an assigned agent at time t. Within the singularity
// guard (two steps before a terminal time) the previous control is held.
Vec2 assigned_control(const AgentState& agent, const Task& task, double t,
                      double dt, int loiter_samples, Vec2 held) {
  const double guard = 2.0 * dt;
  if (task.loiter) {
    const double entry_time = task.loiter_entry_time();
    if (t < entry_time) {
      const double tau = entry_time - t;
      if (tau <= guard) return held;
      // Entry planning always uses the closed form; the configured backend
      // only affects what the auction pays for.
      const LoiterPlan plan =
          plan_loiter_entry(agent, task, t, loiter_samples, {});
      return control_law({agent.position, agent.velocity, plan.entry_point,
                          plan.entry_velocity, tau});
    }
    if (t < task.completion_time && task.loiter->duration > 0.0) {
      // On the circle: ideal centripetal pull toward the reference radius.
      const double rate = 2.0 * std::numbers::pi / task.loiter->duration;
      return (task.position - agent.position) * (rate * rate);
    }
    return {0.0, 0.0};
  }
  const double tau = task.completion_time - t;
  if (tau <= 0.0) return {0.0, 0.0};
  if (tau <= guard) return held;
  return control_law({agent.position, agent.velocity, task.position,
                      task.terminal_velocity, tau});
}

// Remaining lambda-weighted cost of the current profile. Entries inside the
// guard window count as zero (the transfer is effectively over).
double remaining_weighted_cost(const Scenario& scenario,
                               const std::vector<AgentState>& agents,
                               const AllocationProfile& profile, double t,
                               double guard) {
  double total = 0.0;
  CostConfig config;
  config.min_duration = guard;
  for (int i = 0; i < scenario.num_agents(); ++i) {
    const Assignment& a = profile.assignments[i];
    if (!a) continue;
    const Task& task = scenario.tasks[*a];
    const std::optional<double> togo =
        agent_task_cost(agents[i], task, t, scenario.loiter_samples, config);
    if (togo) total += task.lambda * *togo;
  }
  return total;
}

}  // namespace

SimulationState init_state(const Scenario& scenario) {
  SimulationState state;
  const int n = scenario.num_agents();
  state.agents = scenario.agents;
  state.profile.assignments.resize(n);
  for (int i = 0; i < n; ++i)
    state.profile.assignments[i] = scenario.agents[i].frozen_task;
  state.graph = build_comm_graph(positions_of(state.agents), scenario.comm_range);
  state.spent.assign(n, 0.0);
  state.spent_weighted.assign(n, 0.0);
  state.last_control.assign(n, Vec2{});
  return state;
}

SimulationState step(SimulationState state, const Scenario& scenario,
                     const RunOptions& options) {
  const double dt = scenario.dt();
  if (state.step >= scenario.steps)
    throw std::logic_error("step: simulation already at the horizon");
  const int n = scenario.num_agents();

  state.graph = build_comm_graph(positions_of(state.agents), scenario.comm_range);

  if (state.step % options.stride == 0) {
    CostConfig cost = options.cost;
    cost.min_duration = 2.0 * dt;  // unreachable once inside the guard window
    const auto t0 = std::chrono::steady_clock::now();
    const MarginalFn marginal =
        make_cost_marginal_fn(scenario, state.agents, state.time, cost);
    GcaaOptions gcaa_options;
    gcaa_options.record_trace = options.record_bid_trace;
    const AuctionResult auction = run_gcaa(state.agents, scenario.num_tasks(),
                                           state.graph, marginal, gcaa_options);
    state.alloc_wall_seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    state.profile = auction.profile;
    state.auction_iterations.push_back(auction.iterations);
    if (options.record_bid_trace) {
      for (int round = 0; round < static_cast<int>(auction.bid_trace.size());
           ++round) {
        const std::vector<BidState>& views = auction.bid_trace[round];
        for (int i = 0; i < n; ++i)
          state.bid_trace.push_back({state.step, round + 1, i,
                                     views[i].selected[i], views[i].bids[i],
                                     views[i].finalized[i] != 0});
      }
    }
  }

  // Freeze rule: an agent close enough to its assigned target keeps that
  // assignment for good.
  for (int i = 0; i < n; ++i) {
    AgentState& agent = state.agents[i];
    const Assignment& a = state.profile.assignments[i];
    if (agent.frozen_task || !a) continue;
    const Task& task = scenario.tasks[*a];
    const double radius = task.loiter
                              ? scenario.freeze_radius_factor * task.loiter->radius
                              : scenario.fixed_freeze_radius;
    if (distance(agent.position, task.position) - radius < 0.0)
      agent.frozen_task = *a;
  }

  for (int i = 0; i < n; ++i) {
    AgentState& agent = state.agents[i];
    const Assignment& a = state.profile.assignments[i];
    Vec2 control{};
    if (a) {
      control = assigned_control(agent, scenario.tasks[*a], state.time, dt,
                                 scenario.loiter_samples, state.last_control[i]);
      state.last_control[i] = control;
      const double effort = 0.5 * control.norm_sq() * dt;
      state.spent[i] += effort;
      state.spent_weighted[i] += scenario.tasks[*a].lambda * effort;
    } else {
      state.last_control[i] = {0.0, 0.0};
    }
    agent = integrate_step(agent, control, scenario.drag, dt);
  }

  state.step += 1;
  state.time = state.step * dt;

  double reward = 0.0;
  for (int j = 0; j < scenario.num_tasks(); ++j)
    reward += expected_reward(scenario, state.profile, j);
  double spent_total = 0.0;
  double spent_weighted_total = 0.0;
  for (int i = 0; i < n; ++i) {
    spent_total += state.spent[i];
    spent_weighted_total += state.spent_weighted[i];
  }
  const double togo = remaining_weighted_cost(scenario, state.agents,
                                              state.profile, state.time,
                                              2.0 * dt);
  state.metrics.records.push_back({state.step, state.time, spent_total, reward,
                                   reward - spent_weighted_total - togo});
  return state;
}

RunResult run_simulation(const Scenario& scenario, const RunOptions& options) {
  RunResult result;
  SimulationState state = init_state(scenario);
  const int n = scenario.num_agents();
  const auto record = [&](const SimulationState& s) {
    if (!options.record_trajectories) return;
    for (int i = 0; i < n; ++i)
      result.trajectories.push_back({s.step, s.time, i, s.agents[i].position,
                                     s.agents[i].velocity,
                                     s.agents[i].passive(),
                                     s.profile.assignments[i]});
  };
  record(state);
  for (int k = 0; k < scenario.steps; ++k) {
    state = step(std::move(state), scenario, options);
    record(state);
  }
  result.state = std::move(state);
  return result;
}

}  // namespace gcaa
