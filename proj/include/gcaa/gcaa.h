/* Copyright 2026 The Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the greedy coalition auction library: scenario handling,
 * deterministic simulation runs and parameter sweeps. All functions return a
 * gcaa_status; on failure gcaa_last_error() describes the problem for the
 * calling thread. Strings returned through char** are owned by the caller and
 * released with gcaa_string_free().
 */

#ifndef GCAA_GCAA_H
#define GCAA_GCAA_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gcaa_status {
  GCAA_OK = 0,
  GCAA_ERR_INVALID_ARGUMENT = 1,
  GCAA_ERR_PARSE = 2,      /* malformed scenario document */
  GCAA_ERR_VALIDATION = 3, /* well-formed document, invariant violated */
  GCAA_ERR_GUARD = 4,      /* instance exceeds a safety guard */
  GCAA_ERR_IO = 5,         /* file system failure */
  GCAA_ERR_INTERNAL = 6
} gcaa_status;

typedef struct gcaa_scenario gcaa_scenario;
typedef struct gcaa_sim_result gcaa_sim_result;

const char* gcaa_version(void);

/* Last error message recorded on this thread, empty string if none. */
const char* gcaa_last_error(void);

void gcaa_string_free(char* text);

/* ---- Scenarios ---------------------------------------------------------- */

typedef struct gcaa_generate_params {
  int32_t n_agents;
  int32_t n_tasks;
  int32_t n_loiter;
  int32_t range_unlimited; /* nonzero: ignore comm_range */
  double comm_range;
  double horizon;
  int32_t steps;
  double drag;
  double lambda;
} gcaa_generate_params;

void gcaa_generate_params_init(gcaa_generate_params* params);

gcaa_status gcaa_scenario_from_json(const char* text, gcaa_scenario** out);
gcaa_status gcaa_scenario_from_file(const char* path, gcaa_scenario** out);
gcaa_status gcaa_scenario_generate(const gcaa_generate_params* params,
                                   uint64_t seed, gcaa_scenario** out);
gcaa_status gcaa_scenario_to_json(const gcaa_scenario* scenario, char** out);

gcaa_status gcaa_scenario_set_comm_range(gcaa_scenario* scenario, double range);
gcaa_status gcaa_scenario_set_comm_range_unlimited(gcaa_scenario* scenario);
gcaa_status gcaa_scenario_set_horizon(gcaa_scenario* scenario, double horizon);
gcaa_status gcaa_scenario_set_steps(gcaa_scenario* scenario, int32_t steps);

int32_t gcaa_scenario_num_agents(const gcaa_scenario* scenario);
int32_t gcaa_scenario_num_tasks(const gcaa_scenario* scenario);

void gcaa_scenario_free(gcaa_scenario* scenario);

/* ---- Simulation --------------------------------------------------------- */

typedef enum gcaa_cost_backend {
  GCAA_COST_CLOSED_FORM = 0,
  GCAA_COST_NUMERIC = 1 /* quadrature of the feedback law, much slower */
} gcaa_cost_backend;

typedef struct gcaa_run_options {
  int32_t stride;          /* re-auction every `stride` steps, >= 1 */
  int32_t record_bids;     /* keep the per-round bid trace */
  int32_t cost_backend;    /* gcaa_cost_backend */
  int32_t quadrature_steps;
} gcaa_run_options;

void gcaa_run_options_init(gcaa_run_options* options);

/* Runs the dynamic allocation over the scenario horizon. Deterministic for a
 * fixed (scenario, seed); the seed is echoed into the report. */
gcaa_status gcaa_simulate(const gcaa_scenario* scenario, uint64_t seed,
                          const gcaa_run_options* options,
                          gcaa_sim_result** out);

double gcaa_result_global_utility(const gcaa_sim_result* result);
double gcaa_result_expected_reward(const gcaa_sim_result* result);
double gcaa_result_total_cost(const gcaa_sim_result* result);
/* Final assignment of one agent, -1 for the null assignment. */
int32_t gcaa_result_assignment(const gcaa_sim_result* result, int32_t agent);

gcaa_status gcaa_result_metrics_csv(const gcaa_sim_result* result, char** out);
gcaa_status gcaa_result_trajectories_csv(const gcaa_sim_result* result,
                                         char** out);
gcaa_status gcaa_result_bids_csv(const gcaa_sim_result* result, char** out);
gcaa_status gcaa_result_report_json(const gcaa_sim_result* result, char** out);

void gcaa_result_free(gcaa_sim_result* result);

/* ---- Sweeps ------------------------------------------------------------- */

typedef enum gcaa_sweep_axis {
  GCAA_SWEEP_COMM_RANGE = 0,
  GCAA_SWEEP_LOITER_RATIO = 1,
  GCAA_SWEEP_AGENTS_TASKS = 2
} gcaa_sweep_axis;

typedef struct gcaa_sweep_params {
  int32_t axis; /* gcaa_sweep_axis */
  /* Grid values. For the comm-range axis, a non-finite or negative value
   * means unlimited. For agents-tasks the values are the axis levels of the
   * crossed grid. */
  const double* grid;
  int32_t grid_len;
  int32_t seeds;
  uint64_t root_seed;
  gcaa_generate_params base;
  gcaa_run_options run;
} gcaa_sweep_params;

void gcaa_sweep_params_init(gcaa_sweep_params* params);

/* Runs the sweep and returns the aggregate table as CSV. */
gcaa_status gcaa_sweep_run(const gcaa_sweep_params* params, char** csv_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GCAA_GCAA_H */
