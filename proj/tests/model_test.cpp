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

#include "core/model.hpp"

#include <cmath>
#include <vector>

#include "core/rng.hpp"
#include <stdexcept>
#include "doctest.h"
#include "support/test_util.hpp"

using namespace gcaa;

namespace {

// Bare scenario with given rewards and success probabilities; geometry is
// irrelevant for the utility math.
Scenario utility_scenario(int n, const std::vector<double>& rewards,
                          const std::vector<double>& probs,
                          double lambda = 1.0) {
  Scenario s;
  const int p = static_cast<int>(rewards.size());
  s.agents.resize(n);
  for (int i = 0; i < n; ++i) s.agents[i].id = i;
  s.tasks.resize(p);
  for (int j = 0; j < p; ++j) {
    s.tasks[j].id = j;
    s.tasks[j].nominal_reward = rewards[j];
    s.tasks[j].completion_time = 1.0;
    s.tasks[j].lambda = lambda;
  }
  s.success_prob = probs;
  validate(s);
  return s;
}

AllocationProfile profile_of(std::vector<Assignment> a) {
  return AllocationProfile{std::move(a)};
}

CostTable zero_costs(const Scenario& s) {
  CostTable t(s.num_agents(), s.num_tasks());
  for (int i = 0; i < s.num_agents(); ++i)
    for (int j = 0; j < s.num_tasks(); ++j) t.at(i, j) = 0.0;
  return t;
}

}  // namespace

TEST_CASE("coalition extracts the index set of a task") {
  // a = (T1, T1, null)
  const AllocationProfile a = profile_of({0, 0, std::nullopt});
  CHECK(coalition(a, 0, 2) == std::vector<int>{0, 1});
  CHECK(coalition(a, 1, 2).empty());

  const AllocationProfile none = profile_of({std::nullopt, std::nullopt});
  CHECK(coalition(none, 0, 1).empty());

  // a = (T2, T1, T2, null)
  const AllocationProfile b = profile_of({1, 0, 1, std::nullopt});
  CHECK(coalition(b, 1, 2) == std::vector<int>{0, 2});

  CHECK_THROWS_AS(coalition(a, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(coalition(a, -1, 2), std::out_of_range);
}

TEST_CASE("expected_reward follows the product form") {
  SUBCASE("single agent") {
    const Scenario s = utility_scenario(1, {1.0}, {0.5});
    CHECK(expected_reward(s, profile_of({0}), 0) == doctest::Approx(0.5));
  }
  SUBCASE("two agents at one half") {
    const Scenario s = utility_scenario(2, {1.0}, {0.5, 0.5});
    CHECK(expected_reward(s, profile_of({0, 0}), 0) == doctest::Approx(0.75));
  }
  SUBCASE("three agents") {
    const Scenario s = utility_scenario(3, {0.8}, {0.1, 0.2, 0.3});
    CHECK(expected_reward(s, profile_of({0, 0, 0}), 0) ==
          doctest::Approx(0.3968).epsilon(1e-12));
  }
  SUBCASE("empty coalition earns nothing") {
    const Scenario s = utility_scenario(1, {1.0}, {0.5});
    CHECK(expected_reward(s, profile_of({std::nullopt}), 0) == 0.0);
  }
}

TEST_CASE("task_completion_cost sums the coalition") {
  const Scenario s = utility_scenario(3, {1.0}, {0.5, 0.5, 0.5});
  CostTable costs(3, 1);
  costs.at(0, 0) = 2.0;
  costs.at(1, 0) = 3.5;
  costs.at(2, 0) = 0.7;

  CHECK(task_completion_cost(s, profile_of({0, 0, std::nullopt}), 0, costs) ==
        doctest::Approx(5.5));
  CHECK(task_completion_cost(
            s, profile_of({std::nullopt, std::nullopt, std::nullopt}), 0,
            costs) == 0.0);
  CHECK(task_completion_cost(s, profile_of({std::nullopt, std::nullopt, 0}), 0,
                             costs) == doctest::Approx(0.7));

  CostTable missing(3, 1);
  missing.at(0, 0) = 2.0;
  CHECK_THROWS_AS(
      task_completion_cost(s, profile_of({0, 0, std::nullopt}), 0, missing),
      std::logic_error);
}

TEST_CASE("task_utility converts cost into reward units") {
  const Scenario s = utility_scenario(2, {1.0}, {0.5, 0.5});
  CostTable costs(2, 1);
  costs.at(0, 0) = 0.3;
  costs.at(1, 0) = 0.0;
  // reward 0.75, lambda 1, total cost 0.3
  CHECK(task_utility(s, profile_of({0, 0}), 0, costs) == doctest::Approx(0.45));
  CHECK(task_utility(s, profile_of({std::nullopt, std::nullopt}), 0, costs) ==
        0.0);

  const Scenario s2 = utility_scenario(1, {1.0}, {0.5}, 2.0);
  CostTable c2(1, 1);
  c2.at(0, 0) = 0.5;
  CHECK(task_utility(s2, profile_of({0}), 0, c2) == doctest::Approx(-0.5));
}

TEST_CASE("global_utility sums task utilities") {
  SUBCASE("all-null profile") {
    const Scenario s = utility_scenario(2, {1.0, 1.0}, {0.5, 0.5, 0.5, 0.5});
    CHECK(global_utility(s, profile_of({std::nullopt, std::nullopt}),
                         zero_costs(s)) == 0.0);
  }
  SUBCASE("two tasks with utilities 0.45 and -0.1") {
    const Scenario s = utility_scenario(3, {1.0, 0.4}, {0.5, 0.0,  //
                                                        0.5, 0.0,  //
                                                        0.0, 0.75});
    CostTable costs(3, 2);
    costs.at(0, 0) = 0.15;
    costs.at(1, 0) = 0.15;
    costs.at(2, 1) = 0.4;
    // task 0: 0.75 - 0.3 = 0.45; task 1: 0.3 - 0.4 = -0.1
    CHECK(global_utility(s, profile_of({0, 0, 1}), costs) ==
          doctest::Approx(0.35));
  }
  SUBCASE("single task single agent") {
    const Scenario s = utility_scenario(1, {1.0}, {1.0});
    CostTable costs(1, 1);
    costs.at(0, 0) = 0.25;
    CHECK(global_utility(s, profile_of({0}), costs) == doctest::Approx(0.75));
  }
}

TEST_CASE("marginal_utility is the global difference") {
  SUBCASE("null assignment contributes nothing") {
    const Scenario s = utility_scenario(2, {1.0}, {0.5, 0.5});
    CHECK(marginal_utility(s, profile_of({std::nullopt, 0}), 0, zero_costs(s)) ==
          0.0);
  }
  SUBCASE("singleton coalition equals the task utility") {
    const Scenario s = utility_scenario(1, {0.9}, {0.7});
    CostTable costs(1, 1);
    costs.at(0, 0) = 0.2;
    CHECK(marginal_utility(s, profile_of({0}), 0, costs) ==
          doctest::Approx(task_utility(s, profile_of({0}), 0, costs)));
  }
  SUBCASE("pair on one task, second task cancels") {
    // r = 1, p = (0.5, 0.5), lambda = 1, cost of agent 1 = 0.1; a third agent
    // sits on another task so the cancellation across tasks is exercised.
    const Scenario s = utility_scenario(3, {1.0, 0.6}, {0.5, 0.0,  //
                                                        0.5, 0.0,  //
                                                        0.0, 0.5});
    CostTable costs(3, 2);
    costs.at(0, 0) = 0.05;
    costs.at(1, 0) = 0.1;
    costs.at(2, 1) = 0.07;
    const AllocationProfile with = profile_of({0, 0, 1});
    AllocationProfile without = with;
    without.assignments[1] = std::nullopt;
    // Both global utilities computed explicitly.
    const double direct =
        global_utility(s, with, costs) - global_utility(s, without, costs);
    CHECK(direct == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(marginal_utility(s, with, 1, costs) ==
          doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("reward invariants over random coalitions") {
  Rng rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(6));
    std::vector<double> probs(n);
    for (double& q : probs) q = rng.uniform();
    const double reward = rng.uniform(0.0, 2.0);
    const Scenario s = utility_scenario(n, {reward}, probs);

    // Random sub-coalition.
    AllocationProfile profile;
    profile.assignments.assign(n, std::nullopt);
    for (int i = 0; i < n; ++i)
      if (rng.bernoulli(0.5)) profile.assignments[i] = 0;

    const double base = expected_reward(s, profile, 0);
    CHECK(base >= 0.0);
    CHECK(base <= reward + 1e-12);

    // Adding an agent with positive probability never decreases the reward.
    for (int i = 0; i < n; ++i) {
      if (profile.assignments[i]) continue;
      AllocationProfile bigger = profile;
      bigger.assignments[i] = 0;
      CHECK(expected_reward(s, bigger, 0) >= base - 1e-12);
    }
  }
}

TEST_CASE("reward reaches the nominal value only with a certain agent") {
  const Scenario sure = utility_scenario(2, {0.7}, {1.0, 0.4});
  CHECK(expected_reward(sure, profile_of({0, 0}), 0) == doctest::Approx(0.7));

  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(5));
    std::vector<double> probs(n);
    for (double& q : probs) q = rng.uniform(0.0, 0.99);
    const Scenario s = utility_scenario(n, {1.0}, probs);
    AllocationProfile all;
    all.assignments.assign(n, 0);
    CHECK(expected_reward(s, all, 0) < 1.0);
  }
}

TEST_CASE("reward gains are submodular") {
  Rng rng(77);
  const int n = 5;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> probs(n);
    for (double& q : probs) q = rng.uniform();
    const Scenario s = utility_scenario(n, {rng.uniform(0.1, 1.0)}, probs);

    const auto reward_of = [&](unsigned mask) {
      AllocationProfile profile;
      profile.assignments.assign(n, std::nullopt);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) profile.assignments[i] = 0;
      return expected_reward(s, profile, 0);
    };

    for (int i = 0; i < n; ++i) {
      for (unsigned small = 0; small < (1u << n); ++small) {
        if (small & (1u << i)) continue;
        for (unsigned big = small; big < (1u << n); ++big) {
          if ((big & small) != small || (big & (1u << i))) continue;
          const double gain_small = reward_of(small | (1u << i)) - reward_of(small);
          const double gain_big = reward_of(big | (1u << i)) - reward_of(big);
          CHECK(gain_small >= gain_big - 1e-12);
        }
      }
    }
  }
}

TEST_CASE("marginal locality: global difference equals the task-local one") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const Scenario s = test::random_instance(rng, 8, 8);
    CostTable costs(s.num_agents(), s.num_tasks());
    for (int i = 0; i < s.num_agents(); ++i)
      for (int j = 0; j < s.num_tasks(); ++j)
        costs.at(i, j) = rng.uniform(0.0, 0.5);
    AllocationProfile profile;
    profile.assignments.resize(s.num_agents());
    for (int i = 0; i < s.num_agents(); ++i)
      if (rng.bernoulli(0.7))
        profile.assignments[i] =
            static_cast<int>(rng.uniform_index(s.num_tasks()));

    for (int i = 0; i < s.num_agents(); ++i) {
      AllocationProfile without = profile;
      without.assignments[i] = std::nullopt;
      const double global_diff =
          global_utility(s, profile, costs) - global_utility(s, without, costs);
      const double local = marginal_utility(s, profile, i, costs);
      CHECK(local == doctest::Approx(global_diff).epsilon(1e-12));
    }
  }
}

TEST_CASE("marginals sum to the global utility when coalitions are singletons") {
  Rng rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(6));
    const int p = n + static_cast<int>(rng.uniform_index(4));
    std::vector<double> rewards(p);
    for (double& r : rewards) r = rng.uniform(0.0, 1.0);
    std::vector<double> probs(static_cast<std::size_t>(n) * p);
    for (double& q : probs) q = rng.uniform();
    const Scenario s = utility_scenario(n, rewards, probs);
    CostTable costs(n, p);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < p; ++j) costs.at(i, j) = rng.uniform(0.0, 0.3);

    // Each agent on its own task.
    AllocationProfile profile;
    profile.assignments.resize(n);
    for (int i = 0; i < n; ++i) profile.assignments[i] = i;

    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += marginal_utility(s, profile, i, costs);
    CHECK(sum == doctest::Approx(global_utility(s, profile, costs)).epsilon(1e-12));
  }
}

TEST_CASE("validate names the offending field") {
  Scenario s = utility_scenario(1, {1.0}, {0.5});
  s.success_prob[0] = 1.5;
  CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("success_prob"),
                       std::invalid_argument);

  Scenario bad_steps = utility_scenario(1, {1.0}, {0.5});
  bad_steps.steps = 0;
  CHECK_THROWS_WITH_AS(validate(bad_steps), doctest::Contains("steps"),
                       std::invalid_argument);
}
