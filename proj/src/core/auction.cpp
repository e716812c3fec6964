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

#include "core/auction.hpp"

#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace gcaa {

namespace {

std::vector<int> order_or_identity(const std::vector<int>& order, int n) {
  if (!order.empty()) {
    if (static_cast<int>(order.size()) != n)
      throw std::invalid_argument("processing_order: wrong length");
    return order;
  }
  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  return identity;
}

}  // namespace

CommunicationGraph build_comm_graph(const std::vector<Vec2>& positions,
                                    std::optional<double> range) {
  if (range && *range < 0.0)
    throw std::domain_error("build_comm_graph: range must be >= 0");
  const int n = static_cast<int>(positions.size());
  CommunicationGraph graph(n);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k)
      graph.set(i, k, !range || distance(positions[i], positions[k]) <= *range);
  return graph;
}

BidState select_best_task(int agent, const BidState& bid, int num_tasks,
                          const std::function<double(int task)>& utility_of) {
  if (bid.finalized[agent]) return bid;
  BidState next = bid;
  Assignment best;        // null, utility 0
  double best_utility = 0.0;
  for (int j = 0; j < num_tasks; ++j) {
    const double u = utility_of(j);
    if (u > best_utility) {
      best = j;
      best_utility = u;
    }
  }
  next.selected[agent] = best;
  next.bids[agent] = best ? best_utility : 0.0;
  return next;
}

std::vector<BidState> share_state_vectors(const std::vector<BidState>& views,
                                          const CommunicationGraph& graph) {
  const int n = static_cast<int>(views.size());
  std::vector<BidState> next = views;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      if (!graph.connected(i, k) || views[i].finalized[k]) continue;
      next[i].selected[k] = views[k].selected[k];
      next[i].bids[k] = views[k].bids[k];
      next[i].finalized[k] = views[k].finalized[k];
    }
  }
  return next;
}

std::vector<BidState> update_state_vectors(const std::vector<BidState>& views) {
  const int n = static_cast<int>(views.size());
  std::vector<BidState> next = views;
  for (int i = 0; i < n; ++i) {
    BidState& view = next[i];
    int winner = -1;
    for (int k = 0; k < n; ++k) {
      if (view.finalized[k] || !view.selected[k]) continue;
      if (winner < 0 || view.bids[k] > view.bids[winner]) winner = k;
    }
    if (winner < 0) continue;  // nothing proposed in this view
    view.finalized[winner] = 1;
    for (int k = 0; k < n; ++k) {
      if (k == winner || view.finalized[k] || !view.selected[k]) continue;
      view.selected[k] = std::nullopt;
      view.bids[k] = 0.0;
    }
  }
  return next;
}

AuctionResult run_gcaa(const std::vector<AgentState>& agents, int num_tasks,
                       const CommunicationGraph& graph,
                       const MarginalFn& marginal, const GcaaOptions& options) {
  const int n = static_cast<int>(agents.size());
  std::vector<BidState> views(n, BidState(n));
  for (int i = 0; i < n; ++i) {
    if (agents[i].frozen_task) {
      views[i].selected[i] = *agents[i].frozen_task;
      views[i].finalized[i] = 1;
    }
  }
  const std::vector<int> order = order_or_identity(options.processing_order, n);

  AuctionResult result;
  std::vector<Assignment> prev_selection(n);
  std::vector<Assignment> selection(n);
  AllocationProfile others;
  for (int round = 1; round <= n; ++round) {
    // Auction phase. Each agent bids against its view entering the round;
    // phases stay synchronous, so the processing order is immaterial.
    std::vector<BidState> after_select = views;
    for (int i : order) {
      others.assignments = views[i].selected;
      others.assignments[i] = std::nullopt;
      const auto utility_of = [&](int task) { return marginal(i, task, others); };
      after_select[i] = select_best_task(i, views[i], num_tasks, utility_of);
      selection[i] = after_select[i].selected[i];
    }

    views = update_state_vectors(share_state_vectors(after_select, graph));
    result.iterations = round;
    if (options.record_trace) result.bid_trace.push_back(views);

    bool converged = true;
    for (int i = 0; i < n && converged; ++i) {
      if (views[i].finalized[i]) continue;
      // An unassigned agent has settled once it proposed null twice in a row.
      converged = !selection[i] && !prev_selection[i];
    }
    if (converged) break;
    prev_selection = selection;
  }

  result.profile.assignments.resize(n);
  for (int i = 0; i < n; ++i)
    result.profile.assignments[i] = views[i].selected[i];
  return result;
}

namespace {

double reward_gain(const Scenario& scenario, int agent, int task,
                   const AllocationProfile& others) {
  double miss = 1.0;
  for (int k = 0; k < others.size(); ++k)
    if (others.assignments[k] && *others.assignments[k] == task)
      miss *= 1.0 - scenario.prob(k, task);
  return scenario.tasks[task].nominal_reward * miss * scenario.prob(agent, task);
}

}  // namespace

MarginalFn make_table_marginal_fn(const Scenario& scenario,
                                  const CostTable& costs) {
  auto table = std::make_shared<CostTable>(costs);
  return [&scenario, table](int agent, int task, const AllocationProfile& others) {
    const std::optional<double>& cost = table->at(agent, task);
    if (!cost) return -std::numeric_limits<double>::infinity();
    return reward_gain(scenario, agent, task, others) -
           scenario.tasks[task].lambda * *cost;
  };
}

MarginalFn make_cost_marginal_fn(const Scenario& scenario,
                                 const std::vector<AgentState>& states,
                                 double now, const CostConfig& config) {
  const int p = scenario.num_tasks();
  // The agents' states are fixed for the duration of one auction, so
  // cost-to-go values are memoized per (agent, task).
  auto cache = std::make_shared<std::vector<std::optional<std::optional<double>>>>(
      states.size() * p);
  auto states_copy = std::make_shared<std::vector<AgentState>>(states);
  return [&scenario, states_copy, now, config, cache, p](
             int agent, int task, const AllocationProfile& others) {
    auto& slot = (*cache)[static_cast<std::size_t>(agent) * p + task];
    if (!slot)
      slot = agent_task_cost((*states_copy)[agent], scenario.tasks[task], now,
                             scenario.loiter_samples, config);
    const std::optional<double>& cost = *slot;
    if (!cost) return -std::numeric_limits<double>::infinity();
    return reward_gain(scenario, agent, task, others) -
           scenario.tasks[task].lambda * *cost;
  };
}

}  // namespace gcaa
