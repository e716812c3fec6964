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

#include "support/oracle.hpp"

#include <cmath>

#include "core/rng.hpp"
#include <stdexcept>
#include "doctest.h"
#include "support/test_util.hpp"

using namespace gcaa;

namespace {

Scenario flat_scenario(int n, std::vector<double> rewards,
                       std::vector<double> probs) {
  Scenario s;
  s.agents.resize(n);
  for (int i = 0; i < n; ++i) s.agents[i].id = i;
  const int p = static_cast<int>(rewards.size());
  s.tasks.resize(p);
  for (int j = 0; j < p; ++j) {
    s.tasks[j].id = j;
    s.tasks[j].nominal_reward = rewards[j];
    s.tasks[j].completion_time = 1.0;
  }
  s.success_prob = std::move(probs);
  validate(s);
  return s;
}

}  // namespace

TEST_CASE("monte_carlo_reward") {
  SUBCASE("a certain member pins the estimate at the nominal reward") {
    const Scenario s = flat_scenario(2, {0.7}, {1.0, 0.3});
    AllocationProfile profile{{Assignment{0}, Assignment{0}}};
    const auto mc = oracle::monte_carlo_reward(s, profile, 0, 10000, 1);
    CHECK(mc.estimate == 0.7);
    CHECK(mc.std_error == 0.0);
  }
  SUBCASE("an empty coalition estimates zero") {
    const Scenario s = flat_scenario(1, {0.7}, {0.5});
    AllocationProfile profile{{Assignment{}}};
    const auto mc = oracle::monte_carlo_reward(s, profile, 0, 1000, 1);
    CHECK(mc.estimate == 0.0);
  }
  SUBCASE("two halves converge to three quarters") {
    const Scenario s = flat_scenario(2, {1.0}, {0.5, 0.5});
    AllocationProfile profile{{Assignment{0}, Assignment{0}}};
    const auto mc = oracle::monte_carlo_reward(s, profile, 0, 1000000, 7);
    CHECK(std::abs(mc.estimate - 0.75) <= 3.0 * mc.std_error);
  }
}

TEST_CASE("closed-form reward agrees with Monte Carlo on random coalitions") {
  Rng rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(5));
    std::vector<double> probs(n);
    for (double& q : probs) q = rng.uniform();
    const Scenario s = flat_scenario(n, {rng.uniform(0.1, 1.0)}, probs);
    AllocationProfile profile;
    profile.assignments.assign(n, std::nullopt);
    for (int i = 0; i < n; ++i)
      if (rng.bernoulli(0.7)) profile.assignments[i] = 0;

    const double closed = expected_reward(s, profile, 0);
    const auto mc =
        oracle::monte_carlo_reward(s, profile, 0, 100000, rng.next_u64());
    const double slack = std::max(4.0 * mc.std_error, 1e-9);
    CHECK(std::abs(closed - mc.estimate) <= slack);
  }
}

TEST_CASE("exhaustive_optimum") {
  SUBCASE("one agent, one worthwhile task") {
    const Scenario s = flat_scenario(1, {0.5}, {0.8});
    CostTable costs(1, 1);
    costs.at(0, 0) = 0.1;  // utility 0.3
    const auto best = oracle::exhaustive_optimum(s, costs);
    CHECK(best.enumerated == 2);
    CHECK(best.best_profile.assignments[0] == Assignment{0});
    CHECK(best.best_utility == doctest::Approx(0.3));
  }
  SUBCASE("all-negative utilities keep everyone home") {
    const Scenario s = flat_scenario(2, {0.1, 0.1}, {0.5, 0.5, 0.5, 0.5});
    CostTable costs(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) costs.at(i, j) = 1.0;
    const auto best = oracle::exhaustive_optimum(s, costs);
    CHECK(best.best_utility == 0.0);
    for (const Assignment& a : best.best_profile.assignments) CHECK(!a);
    CHECK(best.enumerated == 9);
  }
  SUBCASE("ties resolve to the lexicographically smallest profile") {
    // Two identical agents, two identical tasks, zero costs: many optima; the
    // smallest assigns nobody to a duplicate slot later in the order.
    const Scenario s = flat_scenario(2, {1.0, 1.0}, {1.0, 1.0, 1.0, 1.0});
    CostTable costs(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) costs.at(i, j) = 0.0;
    const auto best = oracle::exhaustive_optimum(s, costs);
    // Utility 2 is reached by several profiles; (T0, T1) is the smallest
    // among them only after (null, ...) variants fall short. The first
    // profile reaching utility 2 in lexicographic order is (T0, T1).
    CHECK(best.best_utility == doctest::Approx(2.0));
    CHECK(best.best_profile.assignments[0] == Assignment{0});
    CHECK(best.best_profile.assignments[1] == Assignment{1});
  }
  SUBCASE("the guard rejects oversized instances") {
    const int n = 9;  // (4 + 1)^9 > 1e6
    std::vector<double> probs(9 * 4, 0.5);
    const Scenario s = flat_scenario(n, {1, 1, 1, 1}, probs);
    CostTable costs(n, 4);
    CHECK_THROWS_AS(oracle::exhaustive_optimum(s, costs), std::length_error);
  }
}

TEST_CASE("greedy auction never beats the exhaustive optimum") {
  Rng rng(909);
  int done = 0;
  while (done < 200) {
    GenerateParams params;
    params.n_agents = 1 + static_cast<int>(rng.uniform_index(4));
    params.n_tasks = 1 + static_cast<int>(rng.uniform_index(4));
    params.n_loiter = static_cast<int>(rng.uniform_index(params.n_tasks + 1));
    const Scenario s = generate_random_scenario(params, rng.next_u64());
    const CostTable costs = test::full_cost_table(s);

    const AuctionResult greedy = test::run_static_gcaa(s, costs);
    const double greedy_utility = global_utility(s, greedy.profile, costs);
    const auto best = oracle::exhaustive_optimum(s, costs);
    CHECK(greedy_utility <= best.best_utility + 1e-12);
    CHECK(greedy_utility >= 0.0);
    CHECK(best.best_utility >= 0.0);
    ++done;
  }
}
