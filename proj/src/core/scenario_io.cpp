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

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gcaa {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kScenarioSchema = "gcaa.scenario/1";
constexpr const char* kReportSchema = "gcaa.report/1";

// Fixed-width round-trip formatting keeps table output bit-reproducible.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const json& member(const json& node, const char* key, const std::string& where) {
  auto it = node.find(key);
  if (it == node.end())
    throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

double number(const json& node, const char* key, const std::string& where) {
  const json& v = member(node, key, where);
  if (!v.is_number())
    throw ParseError(where + "." + key + ": expected a number");
  return v.get<double>();
}

Vec2 vec2_field(const json& node, const char* key, const std::string& where) {
  const json& v = member(node, key, where);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ParseError(where + "." + key + ": expected [x, y]");
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

Scenario scenario_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("scenario: expected a JSON object");
  const std::string schema =
      member(doc, "schema", "scenario").is_string()
          ? doc["schema"].get<std::string>()
          : throw ParseError("scenario.schema: expected a string");
  if (schema != kScenarioSchema)
    throw ParseError("scenario.schema: unsupported schema '" + schema + "'");

  Scenario s;
  const json& range = member(doc, "comm_range", "scenario");
  if (range.is_string() && range.get<std::string>() == "unlimited")
    s.comm_range = std::nullopt;
  else if (range.is_number())
    s.comm_range = range.get<double>();
  else
    throw ParseError("scenario.comm_range: expected a number or \"unlimited\"");

  s.horizon = number(doc, "horizon", "scenario");
  const json& steps = member(doc, "steps", "scenario");
  if (!steps.is_number_integer())
    throw ParseError("scenario.steps: expected an integer");
  s.steps = steps.get<int>();
  s.drag = number(doc, "drag", "scenario");
  if (doc.contains("freeze_radius_factor"))
    s.freeze_radius_factor = number(doc, "freeze_radius_factor", "scenario");
  if (doc.contains("fixed_freeze_radius"))
    s.fixed_freeze_radius = number(doc, "fixed_freeze_radius", "scenario");
  if (doc.contains("loiter_samples")) {
    const json& v = doc["loiter_samples"];
    if (!v.is_number_integer())
      throw ParseError("scenario.loiter_samples: expected an integer");
    s.loiter_samples = v.get<int>();
  }

  const json& agents = member(doc, "agents", "scenario");
  if (!agents.is_array() || agents.empty())
    throw ParseError("scenario.agents: expected a non-empty array");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string where = "agents[" + std::to_string(i) + "]";
    AgentState a;
    a.id = static_cast<int>(i);
    a.position = vec2_field(agents[i], "position", where);
    a.velocity = vec2_field(agents[i], "velocity", where);
    s.agents.push_back(a);
  }

  const json& tasks = member(doc, "tasks", "scenario");
  if (!tasks.is_array() || tasks.empty())
    throw ParseError("scenario.tasks: expected a non-empty array");
  for (std::size_t j = 0; j < tasks.size(); ++j) {
    const std::string where = "tasks[" + std::to_string(j) + "]";
    const json& node = tasks[j];
    Task t;
    t.id = static_cast<int>(j);
    t.position = vec2_field(node, "position", where);
    t.terminal_velocity = vec2_field(node, "terminal_velocity", where);
    t.nominal_reward = number(node, "reward", where);
    t.completion_time = number(node, "completion_time", where);
    t.lambda = number(node, "lambda", where);
    const json& loiter = member(node, "loiter", where);
    if (!loiter.is_null()) {
      if (!loiter.is_object())
        throw ParseError(where + ".loiter: expected an object or null");
      LoiterSpec spec;
      spec.radius = number(loiter, "radius", where + ".loiter");
      spec.duration = number(loiter, "duration", where + ".loiter");
      t.loiter = spec;
    }
    s.tasks.push_back(t);
  }

  const json& prob = member(doc, "success_prob", "scenario");
  if (!prob.is_array() || prob.size() != s.agents.size())
    throw ParseError("scenario.success_prob: expected one row per agent");
  for (std::size_t i = 0; i < prob.size(); ++i) {
    const json& row = prob[i];
    if (!row.is_array() || row.size() != s.tasks.size())
      throw ParseError("scenario.success_prob[" + std::to_string(i) +
                       "]: expected one entry per task");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number())
        throw ParseError("scenario.success_prob[" + std::to_string(i) + "][" +
                         std::to_string(j) + "]: expected a number");
      s.success_prob.push_back(row[j].get<double>());
    }
  }

  try {
    validate(s);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("scenario: ") + e.what());
  }
  return s;
}

Scenario scenario_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open scenario file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_json(buffer.str());
}

std::string scenario_to_json(const Scenario& s) {
  json doc;
  doc["schema"] = kScenarioSchema;
  if (s.comm_range)
    doc["comm_range"] = *s.comm_range;
  else
    doc["comm_range"] = "unlimited";
  doc["horizon"] = s.horizon;
  doc["steps"] = s.steps;
  doc["drag"] = s.drag;
  doc["freeze_radius_factor"] = s.freeze_radius_factor;
  doc["fixed_freeze_radius"] = s.fixed_freeze_radius;
  doc["loiter_samples"] = s.loiter_samples;
  doc["agents"] = json::array();
  for (const AgentState& a : s.agents)
    doc["agents"].push_back(json{{"position", {a.position.x, a.position.y}},
                                 {"velocity", {a.velocity.x, a.velocity.y}}});
  doc["tasks"] = json::array();
  for (const Task& t : s.tasks) {
    json node{{"position", {t.position.x, t.position.y}},
              {"terminal_velocity",
               {t.terminal_velocity.x, t.terminal_velocity.y}},
              {"reward", t.nominal_reward},
              {"completion_time", t.completion_time},
              {"lambda", t.lambda}};
    node["loiter"] = t.loiter ? json{{"radius", t.loiter->radius},
                                     {"duration", t.loiter->duration}}
                              : json(nullptr);
    doc["tasks"].push_back(node);
  }
  doc["success_prob"] = json::array();
  for (int i = 0; i < s.num_agents(); ++i) {
    json row = json::array();
    for (int j = 0; j < s.num_tasks(); ++j) row.push_back(s.prob(i, j));
    doc["success_prob"].push_back(row);
  }
  return doc.dump(2) + "\n";
}

std::string metrics_csv(const MetricsSeries& metrics) {
  std::string out = "# gcaa.metrics/1\n";
  out += "step,time,total_cost,expected_reward,global_utility\n";
  for (const MetricsRecord& r : metrics.records) {
    out += std::to_string(r.step) + "," + fmt(r.time) + "," +
           fmt(r.total_cost) + "," + fmt(r.expected_reward) + "," +
           fmt(r.global_utility) + "\n";
  }
  return out;
}

std::string trajectories_csv(const std::vector<TrajectoryRecord>& records) {
  std::string out = "# gcaa.trajectories/1\n";
  out += "step,time,agent,px,py,vx,vy,passive,task\n";
  for (const TrajectoryRecord& r : records) {
    out += std::to_string(r.step) + "," + fmt(r.time) + "," +
           std::to_string(r.agent) + "," + fmt(r.position.x) + "," +
           fmt(r.position.y) + "," + fmt(r.velocity.x) + "," +
           fmt(r.velocity.y) + "," + (r.passive ? "1" : "0") + "," +
           (r.assignment ? std::to_string(*r.assignment) : "-1") + "\n";
  }
  return out;
}

std::string bid_trace_csv(const std::vector<BidTraceRecord>& records) {
  std::string out = "# gcaa.bids/1\n";
  out += "step,round,agent,selected,bid,finalized\n";
  for (const BidTraceRecord& r : records) {
    out += std::to_string(r.step) + "," + std::to_string(r.round) + "," +
           std::to_string(r.agent) + "," +
           (r.selected ? std::to_string(*r.selected) : "-1") + "," +
           fmt(r.bid) + "," + (r.finalized ? "1" : "0") + "\n";
  }
  return out;
}

std::string sweep_csv(const std::string& axis, const std::vector<SweepRow>& rows) {
  std::string out = "# gcaa.sweep/1\n";
  out += "axis,setting,n_agents,n_tasks,seeds,mean_utility,mean_alloc_ms\n";
  for (const SweepRow& r : rows) {
    out += axis + "," + r.setting + "," + std::to_string(r.n_agents) + "," +
           std::to_string(r.n_tasks) + "," + std::to_string(r.seeds) + "," +
           fmt(r.mean_utility) + "," + fmt(r.mean_alloc_ms) + "\n";
  }
  return out;
}

std::string report_json(const Scenario& scenario, const RunResult& result,
                        std::uint64_t seed) {
  const SimulationState& state = result.state;
  json doc;
  doc["schema"] = kReportSchema;
  doc["seed"] = seed;
  const MetricsRecord& last = state.metrics.records.back();
  doc["global_utility"] = last.global_utility;
  doc["expected_reward"] = last.expected_reward;
  doc["total_cost"] = last.total_cost;
  doc["profile"] = json::array();
  for (const Assignment& a : state.profile.assignments)
    doc["profile"].push_back(a ? json(*a) : json(nullptr));
  doc["coalitions"] = json::array();
  for (int j = 0; j < scenario.num_tasks(); ++j) {
    const std::vector<int> members =
        coalition(state.profile, j, scenario.num_tasks());
    if (members.empty()) continue;
    doc["coalitions"].push_back(json{{"task", j}, {"agents", members}});
  }
  doc["auction_iterations"] = state.auction_iterations;
  doc["steps"] = scenario.steps;
  doc["horizon"] = scenario.horizon;
  return doc.dump(2) + "\n";
}

}  // namespace gcaa
