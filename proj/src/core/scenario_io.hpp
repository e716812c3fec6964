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

#ifndef GCAA_CORE_SCENARIO_IO_HPP
#define GCAA_CORE_SCENARIO_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/model.hpp"
#include "core/simulator.hpp"
#include "core/sweep.hpp"

namespace gcaa {

// Malformed document (bad JSON, missing or mistyped field).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed document violating a scenario invariant. Messages name the
// offending field.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scenario document, schema gcaa.scenario/1. All emitted documents and tables
// carry their schema tag up front.
Scenario scenario_from_json(const std::string& text);
Scenario scenario_from_file(const std::string& path);
std::string scenario_to_json(const Scenario& scenario);

std::string metrics_csv(const MetricsSeries& metrics);
std::string trajectories_csv(const std::vector<TrajectoryRecord>& records);
std::string bid_trace_csv(const std::vector<BidTraceRecord>& records);
std::string sweep_csv(const std::string& axis, const std::vector<SweepRow>& rows);

// Final allocation report: profile, per-task coalitions, headline numbers,
// per-auction iteration counts.
std::string report_json(const Scenario& scenario, const RunResult& result,
                        std::uint64_t seed);

}  // namespace gcaa

#endif  // GCAA_CORE_SCENARIO_IO_HPP
