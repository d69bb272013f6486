// Copyright 2026 The dronecell Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dronecell/experiment.hpp"

using namespace dronecell;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.n_runs = 6;
  c.n_users = 14;
  c.environments = {*find_environment_preset("urban"), *find_environment_preset("suburban")};
  c.seed = 17;
  c.profile.weights.norm = Norm::L2;
  c.workers = 1;
  return c;
}

}  // namespace

TEST_CASE("policy names round-trip") {
  for (Policy p : {Policy::SingleTenancy, Policy::MultiTenancyNoFairness, Policy::MultiTenancyDmf}) {
    CHECK(parse_policy(to_string(p)) == p);
  }
  CHECK_FALSE(parse_policy("greedy").has_value());
}

TEST_CASE("run_policy") {
  const auto urban = *find_environment_preset("urban");

  SUBCASE("single tenancy serves only tenant 0") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Scenario s = generate_scenario(seed, 20, 2, urban);
      const auto r = run_policy(s, Policy::SingleTenancy);
      CHECK(r.assignment.served.size() == 20);
      CHECK(r.mvno_counts(1) == 0);
      for (std::size_t i = 0; i < s.users.size(); ++i) {
        if (s.users[i].mvno_id != 0) CHECK(r.assignment.served(static_cast<Eigen::Index>(i)) == 0);
      }
    }
  }
  SUBCASE("one tenant: every policy coincides in the served total") {
    Scenario s = generate_scenario(3, 15, 1, urban);
    s.targets(0) = 15;
    const auto a = run_policy(s, Policy::SingleTenancy);
    const auto b = run_policy(s, Policy::MultiTenancyNoFairness);
    const auto c = run_policy(s, Policy::MultiTenancyDmf);
    CHECK(a.terms.served == b.terms.served);
    CHECK(b.terms.served == c.terms.served);
  }
  SUBCASE("per-run ordering between policies") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      Scenario s = generate_scenario(seed, 24, 2, urban);
      s.weights.norm = Norm::L2;
      const double single = run_policy(s, Policy::SingleTenancy).terms.served;
      const double free = run_policy(s, Policy::MultiTenancyNoFairness).terms.served;
      const double dmf = run_policy(s, Policy::MultiTenancyDmf).terms.served;
      CAPTURE(seed);
      CHECK(free >= single);
      CHECK(dmf <= free);
    }
  }
}

TEST_CASE("run_experiment") {
  const ExperimentConfig c = small_config();
  const auto summary = run_experiment(c);

  SUBCASE("one row per environment and policy") {
    REQUIRE(summary.rows.size() == 6);
    CHECK(summary.rows[0].environment == "urban");
    CHECK(summary.rows[0].policy == Policy::SingleTenancy);
    CHECK(summary.rows[5].environment == "suburban");
    CHECK(summary.rows[5].policy == Policy::MultiTenancyDmf);
    for (const auto& row : summary.rows) CHECK(row.runs == 6);
  }
  SUBCASE("per-tenant means sum to the total") {
    for (const auto& row : summary.rows) {
      CHECK(row.mean_per_mvno.size() == 2);
      CHECK(row.mean_per_mvno.sum() == doctest::Approx(row.mean_total));
      CHECK(row.std_total >= 0.0);
    }
  }
  SUBCASE("means follow the policy ordering") {
    for (const char* env : {"urban", "suburban"}) {
      const double single = summary.at(env, Policy::SingleTenancy).mean_total;
      const double free = summary.at(env, Policy::MultiTenancyNoFairness).mean_total;
      const double dmf = summary.at(env, Policy::MultiTenancyDmf).mean_total;
      CHECK(free >= single);
      CHECK(dmf <= free);
      CHECK(summary.at(env, Policy::SingleTenancy).mean_per_mvno(1) == 0.0);
    }
  }
  SUBCASE("worker count never changes the results") {
    ExperimentConfig threaded = c;
    threaded.workers = 3;
    const auto other = run_experiment(threaded);
    REQUIRE(other.rows.size() == summary.rows.size());
    for (std::size_t k = 0; k < other.rows.size(); ++k) {
      CHECK(other.rows[k].mean_total == summary.rows[k].mean_total);
      CHECK(other.rows[k].std_total == summary.rows[k].std_total);
      CHECK(other.rows[k].mean_per_mvno == summary.rows[k].mean_per_mvno);
      CHECK(other.rows[k].mean_objective == summary.rows[k].mean_objective);
    }
  }
  SUBCASE("a single run reproduces the direct solve") {
    ExperimentConfig one = c;
    one.n_runs = 1;
    const auto s1 = run_experiment(one);
    for (const auto& env : one.environments) {
      const Scenario s = experiment_scenario(one, env, 0);
      for (Policy p : one.policies) {
        const auto r = run_policy(s, p);
        const auto& row = s1.at(env.name, p);
        CHECK(row.mean_total == r.terms.served);
        CHECK(row.std_total == 0.0);
        CHECK(row.mean_per_mvno == r.mvno_counts.cast<double>());
        CHECK(row.mean_objective == r.terms.objective);
      }
    }
  }
  SUBCASE("run r uses seed + r") {
    const auto env = c.environments[0];
    const Scenario s = experiment_scenario(c, env, 4);
    CHECK(s == generate_scenario(c.seed + 4, c.n_users, c.num_mvnos, env, c.field_size, c.profile));
  }
}

TEST_CASE("experiment errors") {
  SUBCASE("unsupported fairness reports the failing run") {
    ExperimentConfig c = small_config();
    c.num_mvnos = 4;
    c.n_runs = 2;
    c.environments.resize(1);
    c.policies = {Policy::MultiTenancyDmf};
    try {
      run_experiment(c);
      FAIL("expected an ExperimentError");
    } catch (const ExperimentError& e) {
      CHECK(e.run_index() == 0);
    }
  }
  SUBCASE("configuration problems") {
    ExperimentConfig c = small_config();
    c.n_runs = 0;
    c.environments.clear();
    CHECK(config_problems(c).size() >= 2);
    CHECK(config_problems(small_config()).empty());
  }
}
