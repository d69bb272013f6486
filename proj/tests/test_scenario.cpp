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

#include <algorithm>

#include "dronecell/scenario.hpp"
#include "dronecell/scenario_file.hpp"

using namespace dronecell;

namespace {

Scenario case24() { return io::read_scenario_file(DRONECELL_DATA_DIR "/case24.json"); }

bool has_violation(const std::vector<Violation>& vs, std::optional<int> user, const std::string& field) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) {
    return v.user_id == user && v.field == field;
  });
}

}  // namespace

TEST_CASE("validate") {
  const Scenario s = case24();

  SUBCASE("the 24-user urban fixture is well formed") {
    CHECK(s.users.size() == 24);
    CHECK(validate(s).empty());
  }
  SUBCASE("tenant id out of range names the user") {
    Scenario bad = s;
    bad.users[4].mvno_id = 5;
    const auto vs = validate(bad);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0].user_id == bad.users[4].id);
    CHECK(vs[0].field == "mvno");
    CHECK(describe(vs[0]).find("user 4") != std::string::npos);
  }
  SUBCASE("zero capacity") {
    Scenario bad = s;
    bad.capacity = 0.0;
    CHECK(has_violation(validate(bad), std::nullopt, "capacity"));
  }
  SUBCASE("every violation is reported") {
    Scenario bad = s;
    bad.users[0].resource_demand = 0.0;
    bad.users[1].energy_cost = 1.5;
    bad.users[2].id = bad.users[3].id;
    bad.users[5].position = {5000.0, 0.0};
    bad.region.h = {0.0, 100.0};
    bad.targets = TenancyTargets::Constant(3, 1);
    bad.weights.w3 = -1.0;
    bad.environment.eta_nlos = 0.0;
    const auto vs = validate(bad);
    CHECK(has_violation(vs, bad.users[0].id, "r"));
    CHECK(has_violation(vs, bad.users[1].id, "lambda"));
    CHECK(has_violation(vs, bad.users[2].id, "id"));
    CHECK(has_violation(vs, bad.users[5].id, "position"));
    CHECK(has_violation(vs, std::nullopt, "region.h"));
    CHECK(has_violation(vs, std::nullopt, "tenancy.targets"));
    CHECK(has_violation(vs, std::nullopt, "weights"));
    CHECK(has_violation(vs, std::nullopt, "environment"));
  }
  SUBCASE("target larger than the population") {
    Scenario bad = s;
    bad.targets(1) = 25;
    CHECK(has_violation(validate(bad), std::nullopt, "tenancy.targets[1]"));
  }
}

TEST_CASE("generate_scenario") {
  const Environment urban = *find_environment_preset("urban");

  SUBCASE("same seed, same scenario") {
    CHECK(generate_scenario(7, 24, 2, urban) == generate_scenario(7, 24, 2, urban));
    CHECK_FALSE(generate_scenario(7, 24, 2, urban) == generate_scenario(8, 24, 2, urban));
  }
  SUBCASE("case-study shape") {
    const Scenario s = generate_scenario(11, 24, 2, urban);
    const auto n0 = std::count_if(s.users.begin(), s.users.end(),
                                  [](const User& u) { return u.mvno_id == 0; });
    const auto n1 = std::count_if(s.users.begin(), s.users.end(),
                                  [](const User& u) { return u.mvno_id == 1; });
    CHECK(n0 + n1 == 24);
    CHECK(s.targets == Eigen::Vector2i(12, 12));
    CHECK(s.capacity == 24.0);
    CHECK(validate(s).empty());
    for (const auto& u : s.users) {
      CHECK(u.qos_max_path_loss == 100.0);
      CHECK(u.resource_demand == 1.0);
      CHECK(u.energy_cost == 0.0);
      CHECK_FALSE(u.content_request);
      CHECK(std::abs(u.position.x()) <= 1000.0);
      CHECK(std::abs(u.position.y()) <= 1000.0);
    }
  }
  SUBCASE("empty population validates") {
    const Scenario s = generate_scenario(3, 0, 2, urban);
    CHECK(s.users.empty());
    CHECK(validate(s).empty());
  }
  SUBCASE("positions spread over the whole field") {
    const Scenario s = generate_scenario(5, 2000, 3, urban, 500.0);
    Eigen::Vector2d lo = Eigen::Vector2d::Constant(1e9);
    Eigen::Vector2d hi = Eigen::Vector2d::Constant(-1e9);
    Eigen::Vector3i per = Eigen::Vector3i::Zero();
    for (const auto& u : s.users) {
      lo = lo.cwiseMin(u.position);
      hi = hi.cwiseMax(u.position);
      per(u.mvno_id) += 1;
    }
    CHECK(lo.maxCoeff() < -240.0);
    CHECK(hi.minCoeff() > 240.0);
    CHECK(per.minCoeff() > 600);
  }
  SUBCASE("uneven targets") {
    CHECK(even_targets(7, 3) == Eigen::Vector3i(3, 2, 2));
  }
}

TEST_CASE("mvno_counts") {
  const Scenario s = case24();
  const auto n = s.users.size();

  SUBCASE("nobody served") {
    CHECK(mvno_counts(s, Assignment::none(n)) == Eigen::Vector2i::Zero());
  }
  SUBCASE("everybody served on the 13/11 fixture") {
    Assignment all{Eigen::VectorXi::Ones(static_cast<Eigen::Index>(n))};
    CHECK(mvno_counts(s, all) == Eigen::Vector2i(13, 11));
  }
  SUBCASE("single served user of tenant 1") {
    Assignment one = Assignment::none(n);
    const auto it = std::find_if(s.users.begin(), s.users.end(),
                                 [](const User& u) { return u.mvno_id == 1; });
    one.served(it - s.users.begin()) = 1;
    CHECK(mvno_counts(s, one) == Eigen::Vector2i(0, 1));
  }
  SUBCASE("counts sum to the served total") {
    for (int mask = 0; mask < 64; ++mask) {
      Assignment a = Assignment::none(n);
      for (std::size_t i = 0; i < n; ++i) a.served(static_cast<Eigen::Index>(i)) = ((mask * 7 + i) % 3) == 0;
      CHECK(mvno_counts(s, a).sum() == a.served_count());
    }
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(mvno_counts(s, Assignment::none(n - 1)), std::invalid_argument);
  }
}
