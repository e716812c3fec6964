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

#include "core/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "core/rng.hpp"

namespace gcaa {

namespace {

std::uint64_t run_seed(std::uint64_t root, int index) {
  return substream_seed(root + static_cast<std::uint64_t>(index), "sweep-run");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct CellStats {
  double utility_sum = 0.0;
  double wall_sum = 0.0;
};

CellStats run_cell(const Scenario& scenario, const RunOptions& run) {
  RunOptions options = run;
  options.record_trajectories = false;
  options.record_bid_trace = false;
  const RunResult result = run_simulation(scenario, options);
  return {result.state.metrics.records.back().global_utility,
          result.state.alloc_wall_seconds * 1000.0};
}

}  // namespace

std::vector<SweepRow> sweep(const SweepParams& params) {
  if (params.seeds < 1) throw std::invalid_argument("sweep: seeds must be >= 1");
  std::vector<SweepRow> rows;

  const auto aggregate = [&](const std::string& setting, int n, int p,
                             CellStats total) {
    rows.push_back({setting, n, p, params.seeds,
                    total.utility_sum / params.seeds,
                    total.wall_sum / params.seeds});
  };

  switch (params.axis) {
    case SweepAxis::kCommRange: {
      if (params.range_grid.empty())
        throw std::invalid_argument("sweep: empty range grid");
      for (const std::optional<double>& range : params.range_grid) {
        CellStats total;
        for (int si = 0; si < params.seeds; ++si) {
          Scenario scenario =
              generate_random_scenario(params.base, run_seed(params.root_seed, si));
          scenario.comm_range = range;
          const CellStats one = run_cell(scenario, params.run);
          total.utility_sum += one.utility_sum;
          total.wall_sum += one.wall_sum;
        }
        aggregate(range ? format_double(*range) : "unlimited",
                  params.base.n_agents, params.base.n_tasks, total);
      }
      break;
    }
    case SweepAxis::kLoiterRatio: {
      if (params.ratio_grid.empty())
        throw std::invalid_argument("sweep: empty ratio grid");
      for (double ratio : params.ratio_grid) {
        if (ratio < 0.0 || ratio > 1.0)
          throw std::invalid_argument("sweep: loiter ratio must lie in [0, 1]");
        GenerateParams gen = params.base;
        gen.n_loiter = static_cast<int>(std::lround(ratio * gen.n_tasks));
        CellStats total;
        for (int si = 0; si < params.seeds; ++si) {
          const Scenario scenario =
              generate_random_scenario(gen, run_seed(params.root_seed, si));
          const CellStats one = run_cell(scenario, params.run);
          total.utility_sum += one.utility_sum;
          total.wall_sum += one.wall_sum;
        }
        aggregate(format_double(ratio), gen.n_agents, gen.n_tasks, total);
      }
      break;
    }
    case SweepAxis::kAgentsByTasks: {
      if (params.size_grid.empty())
        throw std::invalid_argument("sweep: empty size grid");
      for (int n : params.size_grid) {
        for (int p : params.size_grid) {
          GenerateParams gen = params.base;
          gen.n_agents = n;
          gen.n_tasks = p;
          gen.n_loiter = p / 2;
          CellStats total;
          for (int si = 0; si < params.seeds; ++si) {
            const Scenario scenario =
                generate_random_scenario(gen, run_seed(params.root_seed, si));
            const CellStats one = run_cell(scenario, params.run);
            total.utility_sum += one.utility_sum;
            total.wall_sum += one.wall_sum;
          }
          aggregate("n=" + std::to_string(n) + ",p=" + std::to_string(p), n, p,
                    total);
        }
      }
      break;
    }
  }
  return rows;
}

}  // namespace gcaa
