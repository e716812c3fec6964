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

#ifndef GCAA_CORE_AUCTION_HPP
#define GCAA_CORE_AUCTION_HPP

#include <functional>
#include <optional>
#include <vector>

#include "core/control.hpp"
#include "core/model.hpp"

namespace gcaa {

// One agent's local view of the auction: everyone's selected task, bid value
// and finalization flag to the best of this agent's knowledge. Once a row is
// finalized it is never overwritten in this view.
struct BidState {
  std::vector<Assignment> selected;  // z
  std::vector<double> bids;          // y, nonnegative
  std::vector<char> finalized;       // c

  explicit BidState(int n = 0)
      : selected(n), bids(n, 0.0), finalized(n, 0) {}
  bool operator==(const BidState&) const = default;
};

class CommunicationGraph {
 public:
  CommunicationGraph() = default;
  // Starts complete; build_comm_graph prunes by range.
  explicit CommunicationGraph(int n)
      : n_(n), adjacency_(static_cast<std::size_t>(n) * n, 1) {}

  int size() const { return n_; }
  bool connected(int i, int k) const {
    return adjacency_[static_cast<std::size_t>(i) * n_ + k] != 0;
  }
  void set(int i, int k, bool on) {
    adjacency_[static_cast<std::size_t>(i) * n_ + k] = on ? 1 : 0;
    adjacency_[static_cast<std::size_t>(k) * n_ + i] = on ? 1 : 0;
  }

 private:
  int n_ = 0;
  std::vector<char> adjacency_;
};

// g_ik = (|p_i - p_k| <= range); complete graph when range is empty
// (unlimited). Throws std::domain_error on a negative range.
CommunicationGraph build_comm_graph(const std::vector<Vec2>& positions,
                                    std::optional<double> range);

// Marginal utility of `agent` taking `task`, with the rest of the team fixed
// at `others` (the agent's own entry already nulled). Returns -inf for an
// unreachable task.
using MarginalFn =
    std::function<double(int agent, int task, const AllocationProfile& others)>;

// Auction phase: picks the candidate (null or task) maximizing the agent's
// utility against its current view and writes the selection and bid into the
// agent's own row. Null wins ties at zero; task ties go to the lowest index.
// A finalized agent is returned unchanged.
BidState select_best_task(int agent, const BidState& bid, int num_tasks,
                          const std::function<double(int task)>& utility_of);

// Consensus phase 1: every agent overwrites its not-yet-finalized row k with
// agent k's own entries, for each neighbor k. Rows of non-neighbors are left
// untouched.
std::vector<BidState> share_state_vectors(const std::vector<BidState>& views,
                                          const CommunicationGraph& graph);

// Consensus phase 2: in each view, the unfinalized bidder with the highest
// bid (ties to the lowest agent index) is finalized and every other
// unfinalized bidder is reset to null/0. Agents currently proposing null are
// not contenders and are never finalized here.
std::vector<BidState> update_state_vectors(const std::vector<BidState>& views);

struct GcaaOptions {
  bool record_trace = false;
  // Processing order of agents inside each synchronous phase. Phases read
  // only the previous phase's state, so any permutation gives identical
  // results; tests exercise that contract.
  std::vector<int> processing_order;
};

struct AuctionResult {
  AllocationProfile profile;
  int iterations = 0;
  // Post-consensus snapshot of every view, one entry per round.
  std::vector<std::vector<BidState>> bid_trace;
};

// Full auction: iterates select / share / update until every agent is
// finalized or the unassigned agents' selections have settled on null, with
// the round count capped at the number of agents. Passive agents enter
// pre-finalized on their frozen task.
AuctionResult run_gcaa(const std::vector<AgentState>& agents, int num_tasks,
                       const CommunicationGraph& graph,
                       const MarginalFn& marginal,
                       const GcaaOptions& options = {});

// Production marginal-utility provider: expected-reward gain against the
// view's coalition minus the lambda-weighted cost-to-go from the agent's
// current state, with cost evaluations memoized per (agent, task).
MarginalFn make_cost_marginal_fn(const Scenario& scenario,
                                 const std::vector<AgentState>& states,
                                 double now, const CostConfig& config = {});

// Same utility structure with the cost-to-go values supplied as a table;
// missing entries mean the pair is unreachable.
MarginalFn make_table_marginal_fn(const Scenario& scenario,
                                  const CostTable& costs);

}  // namespace gcaa

#endif  // GCAA_CORE_AUCTION_HPP
