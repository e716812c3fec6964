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

// Command-line front end over the shared-library C API: seeded runs of the
// dynamic task allocation and parameter sweeps, with machine-readable output
// files.

#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gcaa/gcaa.h"
#include "json.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kManifestSchema = "gcaa.manifest/1";

// Exit codes by failure category.
int exit_code(gcaa_status status) {
  switch (status) {
    case GCAA_OK:
      return 0;
    case GCAA_ERR_PARSE:
      return 2;
    case GCAA_ERR_VALIDATION:
      return 3;
    case GCAA_ERR_GUARD:
      return 4;
    case GCAA_ERR_IO:
      return 5;
    default:
      return 1;
  }
}

[[noreturn]] void fail(gcaa_status status, const std::string& context) {
  std::cerr << "gcaa: " << context << ": " << gcaa_last_error() << "\n";
  std::exit(exit_code(status));
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "gcaa: cannot write " << path << "\n";
    std::exit(5);
  }
}

template <typename Fn>
std::string fetch_string(Fn&& fill, const std::string& context) {
  char* text = nullptr;
  const gcaa_status status = fill(&text);
  if (status != GCAA_OK) fail(status, context);
  std::string out(text);
  gcaa_string_free(text);
  return out;
}

struct GenerateSpec {
  int n = 10;
  int p = 10;
  int loiter = 5;
};

// Parses "n=10,p=10,loiter=5".
GenerateSpec parse_generate_spec(const std::string& text) {
  GenerateSpec spec;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--generate", "expected k=v entries");
    const std::string key = item.substr(0, eq);
    const int value = std::stoi(item.substr(eq + 1));
    if (key == "n")
      spec.n = value;
    else if (key == "p")
      spec.p = value;
    else if (key == "loiter")
      spec.loiter = value;
    else
      throw CLI::ValidationError("--generate", "unknown key '" + key + "'");
  }
  return spec;
}

std::string timestamp_utc() {
  char buf[32];
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifest(const std::filesystem::path& out_dir,
                    const std::string& command, const ordered_json& config,
                    std::uint64_t seed) {
  ordered_json doc;
  doc["schema"] = kManifestSchema;
  doc["version"] = gcaa_version();
  doc["command"] = command;
  doc["config"] = config;
  doc["seed"] = seed;
  doc["created"] = timestamp_utc();
  write_file(out_dir / "manifest.json", doc.dump(2) + "\n");
}

struct RunArgs {
  std::string scenario_path;
  std::string generate_spec;
  std::uint64_t seed = 0;
  std::string range;  // "unlimited" or a float
  double tf = 0.0;
  int steps = 0;
  std::string out_dir;
  std::string emit = "metrics,traj";
  int stride = 1;
  std::string cost_backend = "closed";
  int quadrature_steps = 1000;
};

int do_run(const RunArgs& args) {
  gcaa_scenario* scenario = nullptr;
  ordered_json config;
  if (!args.scenario_path.empty()) {
    const gcaa_status status =
        gcaa_scenario_from_file(args.scenario_path.c_str(), &scenario);
    if (status != GCAA_OK) fail(status, "loading " + args.scenario_path);
    config["scenario"] = args.scenario_path;
  } else {
    const GenerateSpec spec = parse_generate_spec(args.generate_spec);
    gcaa_generate_params params;
    gcaa_generate_params_init(&params);
    params.n_agents = spec.n;
    params.n_tasks = spec.p;
    params.n_loiter = spec.loiter;
    if (args.tf > 0.0) params.horizon = args.tf;
    if (args.steps > 0) params.steps = args.steps;
    const gcaa_status status = gcaa_scenario_generate(&params, args.seed, &scenario);
    if (status != GCAA_OK) fail(status, "generating scenario");
    config["generate"] = args.generate_spec;
  }

  if (!args.range.empty()) {
    const gcaa_status status =
        args.range == "unlimited"
            ? gcaa_scenario_set_comm_range_unlimited(scenario)
            : gcaa_scenario_set_comm_range(scenario, std::stod(args.range));
    if (status != GCAA_OK) fail(status, "--range");
    config["range"] = args.range;
  }
  if (args.tf > 0.0) {
    if (gcaa_status s = gcaa_scenario_set_horizon(scenario, args.tf); s != GCAA_OK)
      fail(s, "--tf");
    config["tf"] = args.tf;
  }
  if (args.steps > 0) {
    if (gcaa_status s = gcaa_scenario_set_steps(scenario, args.steps); s != GCAA_OK)
      fail(s, "--steps");
    config["steps"] = args.steps;
  }
  config["emit"] = args.emit;
  config["stride"] = args.stride;
  config["cost_backend"] = args.cost_backend;

  bool emit_metrics = false;
  bool emit_traj = false;
  bool emit_bids = false;
  {
    std::stringstream stream(args.emit);
    std::string item;
    while (std::getline(stream, item, ',')) {
      if (item == "metrics")
        emit_metrics = true;
      else if (item == "traj")
        emit_traj = true;
      else if (item == "bids")
        emit_bids = true;
      else if (!item.empty())
        throw CLI::ValidationError("--emit", "unknown flag '" + item + "'");
    }
  }

  gcaa_run_options options;
  gcaa_run_options_init(&options);
  options.stride = args.stride;
  options.record_bids = emit_bids ? 1 : 0;
  options.cost_backend = args.cost_backend == "numeric" ? GCAA_COST_NUMERIC
                                                        : GCAA_COST_CLOSED_FORM;
  options.quadrature_steps = args.quadrature_steps;

  gcaa_sim_result* result = nullptr;
  if (gcaa_status s = gcaa_simulate(scenario, args.seed, &options, &result);
      s != GCAA_OK)
    fail(s, "simulation");

  const std::filesystem::path out_dir(args.out_dir);
  std::filesystem::create_directories(out_dir);

  write_file(out_dir / "scenario.json",
             fetch_string([&](char** t) { return gcaa_scenario_to_json(scenario, t); },
                          "serializing scenario"));
  if (emit_metrics)
    write_file(out_dir / "metrics.csv",
               fetch_string([&](char** t) { return gcaa_result_metrics_csv(result, t); },
                            "metrics"));
  if (emit_traj)
    write_file(
        out_dir / "trajectories.csv",
        fetch_string([&](char** t) { return gcaa_result_trajectories_csv(result, t); },
                     "trajectories"));
  if (emit_bids)
    write_file(out_dir / "bids.csv",
               fetch_string([&](char** t) { return gcaa_result_bids_csv(result, t); },
                            "bids"));
  write_file(out_dir / "report.json",
             fetch_string([&](char** t) { return gcaa_result_report_json(result, t); },
                          "report"));
  write_manifest(out_dir, "run", config, args.seed);

  std::cout << "global utility " << gcaa_result_global_utility(result)
            << ", outputs in " << out_dir.string() << "\n";
  gcaa_result_free(result);
  gcaa_scenario_free(scenario);
  return 0;
}

struct SweepArgs {
  std::string axis;
  std::string grid;
  int seeds = 10;
  std::uint64_t seed = 0;
  std::string out_dir;
  int n = 10;
  int p = 10;
  int steps = 0;
  std::string cost_backend = "closed";
  int quadrature_steps = 1000;
};

int do_sweep(const SweepArgs& args) {
  std::vector<double> grid;
  {
    std::stringstream stream(args.grid);
    std::string item;
    while (std::getline(stream, item, ',')) {
      if (item == "unlimited")
        grid.push_back(-1.0);  // the C API reads non-positive as unlimited
      else
        grid.push_back(std::stod(item));
    }
  }
  if (grid.empty()) throw CLI::ValidationError("--grid", "empty grid");

  gcaa_sweep_params params;
  gcaa_sweep_params_init(&params);
  if (args.axis == "range")
    params.axis = GCAA_SWEEP_COMM_RANGE;
  else if (args.axis == "loiter-ratio")
    params.axis = GCAA_SWEEP_LOITER_RATIO;
  else if (args.axis == "agents-tasks")
    params.axis = GCAA_SWEEP_AGENTS_TASKS;
  else
    throw CLI::ValidationError("--axis", "expected range|loiter-ratio|agents-tasks");
  params.grid = grid.data();
  params.grid_len = static_cast<int32_t>(grid.size());
  params.seeds = args.seeds;
  params.root_seed = args.seed;
  params.base.n_agents = args.n;
  params.base.n_tasks = args.p;
  params.base.n_loiter = args.p / 2;
  if (args.steps > 0) params.base.steps = args.steps;
  params.run.cost_backend = args.cost_backend == "numeric"
                                ? GCAA_COST_NUMERIC
                                : GCAA_COST_CLOSED_FORM;
  params.run.quadrature_steps = args.quadrature_steps;

  char* csv = nullptr;
  if (gcaa_status s = gcaa_sweep_run(&params, &csv); s != GCAA_OK)
    fail(s, "sweep");

  const std::filesystem::path out_dir(args.out_dir);
  std::filesystem::create_directories(out_dir);
  write_file(out_dir / "sweep.csv", csv);
  gcaa_string_free(csv);

  ordered_json config;
  config["axis"] = args.axis;
  config["grid"] = args.grid;
  config["seeds"] = args.seeds;
  config["n"] = args.n;
  config["p"] = args.p;
  config["cost_backend"] = args.cost_backend;
  if (args.steps > 0) config["steps"] = args.steps;
  write_manifest(out_dir, "sweep", config, args.seed);

  std::cout << "sweep table in " << (out_dir / "sweep.csv").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy coalition auction simulator"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "simulate one scenario");
  auto* scenario_opt =
      run->add_option("--scenario", run_args.scenario_path, "scenario JSON file");
  auto* generate_opt = run->add_option("--generate", run_args.generate_spec,
                                       "generator spec n=<int>,p=<int>,loiter=<int>");
  scenario_opt->excludes(generate_opt);
  run->add_option("--seed", run_args.seed, "root seed");
  run->add_option("--range", run_args.range, "communication range or 'unlimited'");
  run->add_option("--tf", run_args.tf, "horizon override");
  run->add_option("--steps", run_args.steps, "step count override");
  run->add_option("--out", run_args.out_dir, "output directory")->required();
  run->add_option("--emit", run_args.emit, "any of metrics,traj,bids (default metrics,traj)");
  run->add_option("--stride", run_args.stride, "re-auction stride")
      ->check(CLI::PositiveNumber);
  run->add_option("--cost-backend", run_args.cost_backend, "closed|numeric")
      ->check(CLI::IsMember({"closed", "numeric"}));
  run->add_option("--quadrature-steps", run_args.quadrature_steps,
                  "steps per numeric cost evaluation");

  SweepArgs sweep_args;
  CLI::App* sw = app.add_subcommand("sweep", "average runs over a parameter grid");
  sw->add_option("--axis", sweep_args.axis, "range|loiter-ratio|agents-tasks")
      ->required();
  sw->add_option("--grid", sweep_args.grid, "comma-separated grid values")
      ->required();
  sw->add_option("--seeds", sweep_args.seeds, "seeds per grid point")
      ->check(CLI::PositiveNumber);
  sw->add_option("--seed", sweep_args.seed, "root seed");
  sw->add_option("--out", sweep_args.out_dir, "output directory")->required();
  sw->add_option("--n", sweep_args.n, "base agent count");
  sw->add_option("--p", sweep_args.p, "base task count");
  sw->add_option("--steps", sweep_args.steps, "step count override");
  sw->add_option("--cost-backend", sweep_args.cost_backend, "closed|numeric")
      ->check(CLI::IsMember({"closed", "numeric"}));
  sw->add_option("--quadrature-steps", sweep_args.quadrature_steps,
                 "steps per numeric cost evaluation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      if (run_args.scenario_path.empty() && run_args.generate_spec.empty()) {
        std::cerr << "gcaa: run needs --scenario or --generate\n";
        return 2;
      }
      return do_run(run_args);
    }
    return do_sweep(sweep_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "gcaa: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gcaa: " << e.what() << "\n";
    return 1;
  }
}
