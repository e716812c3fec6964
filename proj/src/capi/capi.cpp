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

#include "gcaa/gcaa.h"

#include <cmath>
#include <cstring>
#include <ios>
#include <new>
#include <stdexcept>
#include <string>

#include "core/scenario_gen.hpp"
#include "core/scenario_io.hpp"
#include "core/simulator.hpp"
#include "core/sweep.hpp"

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// Maps exceptions thrown by the core onto status codes.
template <typename Fn>
gcaa_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GCAA_OK;
  } catch (const gcaa::ParseError& e) {
    g_last_error = e.what();
    return GCAA_ERR_PARSE;
  } catch (const gcaa::ValidationError& e) {
    g_last_error = e.what();
    return GCAA_ERR_VALIDATION;
  } catch (const std::ios_base::failure& e) {
    g_last_error = e.what();
    return GCAA_ERR_IO;
  } catch (const std::length_error& e) {
    g_last_error = e.what();
    return GCAA_ERR_GUARD;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return GCAA_ERR_VALIDATION;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return GCAA_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GCAA_ERR_INTERNAL;
  }
}

gcaa_status invalid(const char* message) {
  g_last_error = message;
  return GCAA_ERR_INVALID_ARGUMENT;
}

gcaa::RunOptions to_run_options(const gcaa_run_options* options) {
  gcaa::RunOptions run;
  if (!options) return run;
  run.stride = options->stride >= 1 ? options->stride : 1;
  run.record_bid_trace = options->record_bids != 0;
  run.cost.backend = options->cost_backend == GCAA_COST_NUMERIC
                         ? gcaa::CostBackend::kNumeric
                         : gcaa::CostBackend::kClosedForm;
  if (options->quadrature_steps >= 8)
    run.cost.quadrature_steps = options->quadrature_steps;
  return run;
}

gcaa::GenerateParams to_generate_params(const gcaa_generate_params& p) {
  gcaa::GenerateParams gen;
  gen.n_agents = p.n_agents;
  gen.n_tasks = p.n_tasks;
  gen.n_loiter = p.n_loiter;
  if (!p.range_unlimited) gen.comm_range = p.comm_range;
  gen.horizon = p.horizon;
  gen.steps = p.steps;
  gen.drag = p.drag;
  gen.lambda = p.lambda;
  return gen;
}

}  // namespace

struct gcaa_scenario {
  gcaa::Scenario scenario;
};

struct gcaa_sim_result {
  gcaa::Scenario scenario;
  gcaa::RunResult result;
  bool has_bids = false;
  uint64_t seed = 0;
};

extern "C" {

const char* gcaa_version(void) { return "0.1.0"; }

const char* gcaa_last_error(void) { return g_last_error.c_str(); }

void gcaa_string_free(char* text) { delete[] text; }

void gcaa_generate_params_init(gcaa_generate_params* params) {
  if (!params) return;
  *params = {};
  params->n_agents = 10;
  params->n_tasks = 10;
  params->n_loiter = 5;
  params->range_unlimited = 1;
  params->comm_range = 0.3;
  params->horizon = 10.0;
  params->steps = 1000;
  params->drag = 0.1;
  params->lambda = 1.0;
}

gcaa_status gcaa_scenario_from_json(const char* text, gcaa_scenario** out) {
  if (!text || !out) return invalid("null argument");
  return guarded([&] {
    auto handle = new gcaa_scenario{gcaa::scenario_from_json(text)};
    *out = handle;
  });
}

gcaa_status gcaa_scenario_from_file(const char* path, gcaa_scenario** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] {
    auto handle = new gcaa_scenario{gcaa::scenario_from_file(path)};
    *out = handle;
  });
}

gcaa_status gcaa_scenario_generate(const gcaa_generate_params* params,
                                   uint64_t seed, gcaa_scenario** out) {
  if (!params || !out) return invalid("null argument");
  return guarded([&] {
    auto handle = new gcaa_scenario{
        gcaa::generate_random_scenario(to_generate_params(*params), seed)};
    *out = handle;
  });
}

gcaa_status gcaa_scenario_to_json(const gcaa_scenario* scenario, char** out) {
  if (!scenario || !out) return invalid("null argument");
  return guarded([&] { *out = copy_string(gcaa::scenario_to_json(scenario->scenario)); });
}

gcaa_status gcaa_scenario_set_comm_range(gcaa_scenario* scenario, double range) {
  if (!scenario) return invalid("null scenario");
  if (!(range > 0.0) || !std::isfinite(range))
    return invalid("comm_range: must be finite and > 0");
  scenario->scenario.comm_range = range;
  return GCAA_OK;
}

gcaa_status gcaa_scenario_set_comm_range_unlimited(gcaa_scenario* scenario) {
  if (!scenario) return invalid("null scenario");
  scenario->scenario.comm_range = std::nullopt;
  return GCAA_OK;
}

gcaa_status gcaa_scenario_set_horizon(gcaa_scenario* scenario, double horizon) {
  if (!scenario) return invalid("null scenario");
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    return invalid("horizon: must be finite and > 0");
  scenario->scenario.horizon = horizon;
  return GCAA_OK;
}

gcaa_status gcaa_scenario_set_steps(gcaa_scenario* scenario, int32_t steps) {
  if (!scenario) return invalid("null scenario");
  if (steps < 1) return invalid("steps: must be >= 1");
  scenario->scenario.steps = steps;
  return GCAA_OK;
}

int32_t gcaa_scenario_num_agents(const gcaa_scenario* scenario) {
  return scenario ? scenario->scenario.num_agents() : -1;
}

int32_t gcaa_scenario_num_tasks(const gcaa_scenario* scenario) {
  return scenario ? scenario->scenario.num_tasks() : -1;
}

void gcaa_scenario_free(gcaa_scenario* scenario) { delete scenario; }

void gcaa_run_options_init(gcaa_run_options* options) {
  if (!options) return;
  *options = {};
  options->stride = 1;
  options->record_bids = 0;
  options->cost_backend = GCAA_COST_CLOSED_FORM;
  options->quadrature_steps = 1000;
}

gcaa_status gcaa_simulate(const gcaa_scenario* scenario, uint64_t seed,
                          const gcaa_run_options* options,
                          gcaa_sim_result** out) {
  if (!scenario || !out) return invalid("null argument");
  return guarded([&] {
    const gcaa::RunOptions run = to_run_options(options);
    auto handle = new gcaa_sim_result;
    handle->scenario = scenario->scenario;
    handle->result = gcaa::run_simulation(scenario->scenario, run);
    handle->has_bids = run.record_bid_trace;
    handle->seed = seed;
    *out = handle;
  });
}

double gcaa_result_global_utility(const gcaa_sim_result* result) {
  if (!result || result->result.state.metrics.records.empty()) return 0.0;
  return result->result.state.metrics.records.back().global_utility;
}

double gcaa_result_expected_reward(const gcaa_sim_result* result) {
  if (!result || result->result.state.metrics.records.empty()) return 0.0;
  return result->result.state.metrics.records.back().expected_reward;
}

double gcaa_result_total_cost(const gcaa_sim_result* result) {
  if (!result || result->result.state.metrics.records.empty()) return 0.0;
  return result->result.state.metrics.records.back().total_cost;
}

int32_t gcaa_result_assignment(const gcaa_sim_result* result, int32_t agent) {
  if (!result) return -1;
  const auto& assignments = result->result.state.profile.assignments;
  if (agent < 0 || agent >= static_cast<int32_t>(assignments.size())) return -1;
  return assignments[agent] ? *assignments[agent] : -1;
}

gcaa_status gcaa_result_metrics_csv(const gcaa_sim_result* result, char** out) {
  if (!result || !out) return invalid("null argument");
  return guarded(
      [&] { *out = copy_string(gcaa::metrics_csv(result->result.state.metrics)); });
}

gcaa_status gcaa_result_trajectories_csv(const gcaa_sim_result* result,
                                         char** out) {
  if (!result || !out) return invalid("null argument");
  return guarded([&] {
    *out = copy_string(gcaa::trajectories_csv(result->result.trajectories));
  });
}

gcaa_status gcaa_result_bids_csv(const gcaa_sim_result* result, char** out) {
  if (!result || !out) return invalid("null argument");
  if (!result->has_bids) return invalid("bid trace was not recorded");
  return guarded([&] {
    *out = copy_string(gcaa::bid_trace_csv(result->result.state.bid_trace));
  });
}

gcaa_status gcaa_result_report_json(const gcaa_sim_result* result, char** out) {
  if (!result || !out) return invalid("null argument");
  return guarded([&] {
    *out = copy_string(
        gcaa::report_json(result->scenario, result->result, result->seed));
  });
}

void gcaa_result_free(gcaa_sim_result* result) { delete result; }

void gcaa_sweep_params_init(gcaa_sweep_params* params) {
  if (!params) return;
  *params = {};
  params->axis = GCAA_SWEEP_COMM_RANGE;
  params->seeds = 10;
  gcaa_generate_params_init(&params->base);
  gcaa_run_options_init(&params->run);
}

gcaa_status gcaa_sweep_run(const gcaa_sweep_params* params, char** csv_out) {
  if (!params || !csv_out) return invalid("null argument");
  if (!params->grid || params->grid_len < 1) return invalid("empty sweep grid");
  return guarded([&] {
    gcaa::SweepParams sweep_params;
    sweep_params.seeds = params->seeds;
    sweep_params.root_seed = params->root_seed;
    sweep_params.base = to_generate_params(params->base);
    sweep_params.run = to_run_options(&params->run);
    std::string axis;
    switch (params->axis) {
      case GCAA_SWEEP_COMM_RANGE:
        sweep_params.axis = gcaa::SweepAxis::kCommRange;
        axis = "range";
        for (int i = 0; i < params->grid_len; ++i) {
          const double v = params->grid[i];
          if (!std::isfinite(v) || v <= 0.0)
            sweep_params.range_grid.push_back(std::nullopt);
          else
            sweep_params.range_grid.push_back(v);
        }
        break;
      case GCAA_SWEEP_LOITER_RATIO:
        sweep_params.axis = gcaa::SweepAxis::kLoiterRatio;
        axis = "loiter-ratio";
        sweep_params.ratio_grid.assign(params->grid,
                                       params->grid + params->grid_len);
        break;
      case GCAA_SWEEP_AGENTS_TASKS:
        sweep_params.axis = gcaa::SweepAxis::kAgentsByTasks;
        axis = "agents-tasks";
        for (int i = 0; i < params->grid_len; ++i)
          sweep_params.size_grid.push_back(static_cast<int>(params->grid[i]));
        break;
      default:
        throw std::invalid_argument("sweep: unknown axis");
    }
    *csv_out = copy_string(gcaa::sweep_csv(axis, gcaa::sweep(sweep_params)));
  });
}

}  // extern "C"
