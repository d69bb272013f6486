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

#include "dronecell/scenario.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dronecell {
namespace {

// 53-bit uniform in [0, 1); independent of the standard library's distributions
// so generated scenarios match across toolchains.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_interval(const Interval& iv, const std::string& field, std::vector<Violation>& out) {
  if (!(iv.min < iv.max)) out.push_back({std::nullopt, field, "min must be < max"});
}

}  // namespace

std::string describe(const Violation& v) {
  std::ostringstream os;
  if (v.user_id) os << "user " << *v.user_id << ": ";
  os << v.field << ": " << v.message;
  return os.str();
}

std::vector<Violation> validate(const Scenario& s) {
  std::vector<Violation> out;
  const auto n_users = static_cast<int>(s.users.size());

  if (s.num_mvnos < 1) out.push_back({std::nullopt, "tenancy.J", "must be >= 1"});
  if (s.targets.size() != s.num_mvnos) {
    out.push_back({std::nullopt, "tenancy.targets", "length must equal J"});
  }
  for (Eigen::Index j = 0; j < s.targets.size(); ++j) {
    if (s.targets(j) < 0 || s.targets(j) > n_users) {
      out.push_back({std::nullopt, "tenancy.targets[" + std::to_string(j) + "]",
                     "must lie in [0, number of users]"});
    }
  }

  const auto& w = s.weights;
  if (!(w.w1 >= 0 && w.w2 >= 0 && w.w3 >= 0 && w.w4 >= 0)) {
    out.push_back({std::nullopt, "weights", "all weights must be non-negative"});
  }
  if (!(s.capacity > 0)) out.push_back({std::nullopt, "capacity", "must be > 0"});

  check_interval(s.region.x, "region.x", out);
  check_interval(s.region.y, "region.y", out);
  check_interval(s.region.h, "region.h", out);
  if (!(s.region.h.min > 0)) out.push_back({std::nullopt, "region.h", "h_min must be > 0"});
  check_interval(s.field_x, "field.x", out);
  check_interval(s.field_y, "field.y", out);

  const auto& env = s.environment;
  if (!(env.plos_a > 0 && env.plos_b > 0)) {
    out.push_back({std::nullopt, "environment", "a and b must be > 0"});
  }
  if (!(env.eta_los >= 0 && env.eta_los <= env.eta_nlos)) {
    out.push_back({std::nullopt, "environment", "require 0 <= eta_los <= eta_nlos"});
  }
  if (!(s.channel.carrier_frequency > 0)) {
    out.push_back({std::nullopt, "channel.frequency_hz", "must be > 0"});
  }
  if (!(s.channel.max_path_loss > 0)) {
    out.push_back({std::nullopt, "channel.default_max_path_loss_db", "must be > 0"});
  }

  std::set<int> ids;
  for (const auto& u : s.users) {
    if (!ids.insert(u.id).second) out.push_back({u.id, "id", "duplicate user id"});
    if (u.mvno_id < 0 || u.mvno_id >= s.num_mvnos) {
      out.push_back({u.id, "mvno", "must lie in [0, J)"});
    }
    if (!(u.resource_demand > 0)) out.push_back({u.id, "r", "resource demand must be > 0"});
    if (!(u.energy_cost >= 0 && u.energy_cost <= 1)) {
      out.push_back({u.id, "lambda", "energy cost must lie in [0, 1]"});
    }
    if (!(u.qos_max_path_loss > 0)) out.push_back({u.id, "q_db", "must be > 0"});
    if (!(s.field_x.contains(u.position.x()) && s.field_y.contains(u.position.y()))) {
      out.push_back({u.id, "position", "outside the field of interest"});
    }
  }
  return out;
}

TenancyTargets even_targets(int n_users, int num_mvnos) {
  if (num_mvnos < 1) throw std::invalid_argument("even_targets: J must be >= 1");
  TenancyTargets v = TenancyTargets::Constant(num_mvnos, n_users / num_mvnos);
  for (int j = 0; j < n_users % num_mvnos; ++j) v(j) += 1;
  return v;
}

Scenario generate_scenario(std::uint64_t seed, int n_users, int num_mvnos, const Environment& env,
                           double field_size, const ScenarioProfile& profile) {
  if (n_users < 0) throw std::invalid_argument("generate_scenario: n_users must be >= 0");
  if (num_mvnos < 1) throw std::invalid_argument("generate_scenario: J must be >= 1");
  if (!(field_size > 0)) throw std::invalid_argument("generate_scenario: field_size must be > 0");

  const double half = field_size / 2.0;
  Scenario s;
  s.num_mvnos = num_mvnos;
  s.targets = profile.targets.value_or(even_targets(n_users, num_mvnos));
  s.weights = profile.weights;
  s.capacity = profile.capacity.value_or(static_cast<double>(n_users));
  s.field_x = {-half, half};
  s.field_y = {-half, half};
  s.region = {{-half, half}, {-half, half}, profile.h_bounds};
  s.environment = env;
  s.channel = profile.channel;

  std::mt19937_64 rng(seed);
  s.users.reserve(static_cast<std::size_t>(n_users));
  for (int i = 0; i < n_users; ++i) {
    User u;
    u.id = i;
    const double x = -half + field_size * unit_uniform(rng);
    const double y = -half + field_size * unit_uniform(rng);
    u.position = {x, y};
    u.mvno_id = static_cast<int>(rng() % static_cast<std::uint64_t>(num_mvnos));
    u.qos_max_path_loss = profile.qos_db;
    u.resource_demand = profile.resource_demand;
    u.energy_cost = profile.random_energy_cost ? unit_uniform(rng) : profile.energy_cost;
    u.content_request =
        profile.content_probability > 0 && unit_uniform(rng) < profile.content_probability;
    s.users.push_back(u);
  }
  // A zero-sized profile would leave capacity at 0; keep it valid.
  if (!profile.capacity && n_users == 0) s.capacity = 1.0;
  return s;
}

Eigen::VectorXi mvno_counts(const Scenario& scenario, const Assignment& assignment) {
  if (assignment.served.size() != static_cast<Eigen::Index>(scenario.users.size())) {
    throw std::invalid_argument("mvno_counts: assignment length does not match users");
  }
  Eigen::VectorXi counts = Eigen::VectorXi::Zero(scenario.num_mvnos);
  for (std::size_t i = 0; i < scenario.users.size(); ++i) {
    if (assignment.served(static_cast<Eigen::Index>(i)) == 0) continue;
    const int j = scenario.users[i].mvno_id;
    if (j < 0 || j >= scenario.num_mvnos) {
      throw std::invalid_argument("mvno_counts: user tenant outside [0, J)");
    }
    counts(j) += 1;
  }
  return counts;
}

}  // namespace dronecell
