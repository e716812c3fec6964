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

#include "core/scenario_io.hpp"

#include <string>

#include "core/scenario_gen.hpp"
#include <ios>
#include <stdexcept>
#include "doctest.h"

using namespace gcaa;

namespace {

const char* kMinimalScenario = R"({
  "schema": "gcaa.scenario/1",
  "comm_range": "unlimited",
  "horizon": 10.0,
  "steps": 100,
  "drag": 0.1,
  "agents": [{"position": [0.1, 0.2], "velocity": [0.0, 0.0]}],
  "tasks": [{
    "position": [0.5, 0.5],
    "terminal_velocity": [0.0, 0.0],
    "reward": 0.5,
    "completion_time": 9.0,
    "lambda": 1.0,
    "loiter": null
  }],
  "success_prob": [[0.8]]
})";

std::string with_replacement(std::string text, const std::string& from,
                             const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

}  // namespace

TEST_CASE("minimal scenario loads") {
  const Scenario s = scenario_from_json(kMinimalScenario);
  CHECK(s.num_agents() == 1);
  CHECK(s.num_tasks() == 1);
  CHECK(!s.comm_range);
  CHECK(s.tasks[0].nominal_reward == 0.5);
  CHECK(s.prob(0, 0) == 0.8);
  // Defaults apply when optional fields are absent.
  CHECK(s.freeze_radius_factor == 2.0);
  CHECK(s.fixed_freeze_radius == 0.05);
  CHECK(s.loiter_samples == 10);
}

TEST_CASE("round trip through text is lossless") {
  GenerateParams params;
  params.n_agents = 7;
  params.n_tasks = 9;
  params.n_loiter = 4;
  params.comm_range = 0.3;
  const Scenario original = generate_random_scenario(params, 2718);
  const std::string text = scenario_to_json(original);
  const Scenario reparsed = scenario_from_json(text);
  CHECK(scenario_to_json(reparsed) == text);
}

TEST_CASE("documents begin with their schema tag") {
  const Scenario s = scenario_from_json(kMinimalScenario);
  CHECK(scenario_to_json(s).find("\"schema\": \"gcaa.scenario/1\"") <
        std::string::npos);
  CHECK(scenario_to_json(s).rfind("{\n  \"schema\"", 0) == 0);
  CHECK(metrics_csv({}).rfind("# gcaa.metrics/1\n", 0) == 0);
  CHECK(trajectories_csv({}).rfind("# gcaa.trajectories/1\n", 0) == 0);
  CHECK(bid_trace_csv({}).rfind("# gcaa.bids/1\n", 0) == 0);
  CHECK(sweep_csv("range", {}).rfind("# gcaa.sweep/1\n", 0) == 0);
}

TEST_CASE("out-of-range success probability names the field") {
  const std::string bad =
      with_replacement(kMinimalScenario, "[[0.8]]", "[[1.5]]");
  CHECK_THROWS_WITH_AS(scenario_from_json(bad),
                       doctest::Contains("success_prob"), ValidationError);
}

TEST_CASE("malformed documents raise parse errors naming the field") {
  CHECK_THROWS_AS(scenario_from_json("not json at all"), ParseError);
  CHECK_THROWS_WITH_AS(scenario_from_json("{\"schema\": \"gcaa.scenario/1\"}"),
                       doctest::Contains("comm_range"), ParseError);
  const std::string wrong_type =
      with_replacement(kMinimalScenario, "\"steps\": 100", "\"steps\": \"x\"");
  CHECK_THROWS_WITH_AS(scenario_from_json(wrong_type),
                       doctest::Contains("steps"), ParseError);
  const std::string bad_schema = with_replacement(
      kMinimalScenario, "gcaa.scenario/1", "gcaa.scenario/99");
  CHECK_THROWS_AS(scenario_from_json(bad_schema), ParseError);
}

TEST_CASE("dimension mismatches are parse errors") {
  const std::string bad_row =
      with_replacement(kMinimalScenario, "[[0.8]]", "[[0.8, 0.4]]");
  CHECK_THROWS_WITH_AS(scenario_from_json(bad_row),
                       doctest::Contains("success_prob"), ParseError);
}

TEST_CASE("missing files surface as I/O failures") {
  CHECK_THROWS_AS(scenario_from_file("/nonexistent/path/to/scenario.json"),
                  std::ios_base::failure);
}

TEST_CASE("the headline generator setup matches its configuration") {
  // Ten agents, ten tasks (half loitering), range 0.3 over a 10 s horizon in
  // 1000 steps.
  GenerateParams params;
  params.comm_range = 0.3;
  const Scenario s = generate_random_scenario(params, 1);
  CHECK(s.num_agents() == 10);
  CHECK(s.num_tasks() == 10);
  CHECK(s.comm_range == std::optional<double>{0.3});
  CHECK(s.horizon == 10.0);
  CHECK(s.steps == 1000);
  int loiter = 0;
  for (const Task& t : s.tasks) loiter += t.loiter ? 1 : 0;
  CHECK(loiter == 5);
  CHECK(s.dt() == doctest::Approx(0.01));
}
