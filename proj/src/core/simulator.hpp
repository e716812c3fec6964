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

#ifndef GCAA_CORE_SIMULATOR_HPP
#define GCAA_CORE_SIMULATOR_HPP

#include <vector>

#include "core/auction.hpp"
#include "core/control.hpp"
#include "core/model.hpp"

namespace gcaa {

struct MetricsRecord {
  int step = 0;
  double time = 0.0;
  double total_cost = 0.0;       // accumulated control effort, all agents
  double expected_reward = 0.0;  // of the current profile
  double global_utility = 0.0;   // reward minus weighted spent + remaining cost
};

struct MetricsSeries {
  std::vector<MetricsRecord> records;
};

struct TrajectoryRecord {
  int step = 0;
  double time = 0.0;
  int agent = 0;
  Vec2 position;
  Vec2 velocity;
  bool passive = false;
  Assignment assignment;
};

struct BidTraceRecord {
  int step = 0;   // simulation step of the auction
  int round = 0;  // auction round
  int agent = 0;
  Assignment selected;
  double bid = 0.0;
  bool finalized = false;
};

struct RunOptions {
  int stride = 1;  // re-auction every `stride` steps
  CostConfig cost;
  bool record_trajectories = true;
  bool record_bid_trace = false;
};

struct SimulationState {
  double time = 0.0;
  int step = 0;
  std::vector<AgentState> agents;
  AllocationProfile profile;
  CommunicationGraph graph;
  MetricsSeries metrics;
  // Accounting.
  std::vector<double> spent;           // (1/2) int |u|^2 per agent
  std::vector<double> spent_weighted;  // lambda-weighted at expenditure time
  std::vector<Vec2> last_control;      // held inside the singularity guard
  std::vector<int> auction_iterations;
  double alloc_wall_seconds = 0.0;  // auction + cost evaluation only
  std::vector<BidTraceRecord> bid_trace;
};

SimulationState init_state(const Scenario& scenario);

// Advances one time step: rebuild the communication graph, re-run the auction
// among active agents (per stride), apply the freeze rule, integrate the
// dynamics, append metrics. Throws std::logic_error past the horizon.
SimulationState step(SimulationState state, const Scenario& scenario,
                     const RunOptions& options = {});

struct RunResult {
  SimulationState state;  // final
  std::vector<TrajectoryRecord> trajectories;
};

// Runs the full horizon. Deterministic: identical scenarios give bit-identical
// metrics and trajectories (all randomness lives in scenario generation).
RunResult run_simulation(const Scenario& scenario, const RunOptions& options = {});

}  // namespace gcaa

#endif  // GCAA_CORE_SIMULATOR_HPP
