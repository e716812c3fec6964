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

#ifndef GCAA_CORE_SWEEP_HPP
#define GCAA_CORE_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/scenario_gen.hpp"
#include "core/simulator.hpp"

namespace gcaa {

enum class SweepAxis { kCommRange, kLoiterRatio, kAgentsByTasks };

struct SweepParams {
  SweepAxis axis = SweepAxis::kCommRange;
  // Grid for the selected axis; the others are ignored.
  std::vector<std::optional<double>> range_grid;  // empty entry = unlimited
  std::vector<double> ratio_grid;                 // loiter fraction in [0, 1]
  std::vector<int> size_grid;                     // agent/task counts (crossed)
  int seeds = 10;
  std::uint64_t root_seed = 0;
  GenerateParams base;
  RunOptions run;
};

struct SweepRow {
  std::string setting;  // human-readable grid point
  int n_agents = 0;
  int n_tasks = 0;
  int seeds = 0;
  double mean_utility = 0.0;   // final global utility, averaged over seeds
  double mean_alloc_ms = 0.0;  // allocation wall time per run, averaged
};

// Runs the grid. The seed substream is shared across grid points so that a
// given seed index reuses the same random draws everywhere (paired
// comparisons).
std::vector<SweepRow> sweep(const SweepParams& params);

}  // namespace gcaa

#endif  // GCAA_CORE_SWEEP_HPP
