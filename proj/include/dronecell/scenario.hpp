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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "dronecell/channel.hpp"

namespace dronecell {

struct Interval {
  double min{};
  double max{};

  bool contains(double v) const { return v >= min && v <= max; }
  double width() const { return max - min; }
  bool operator==(const Interval&) const = default;
};

struct User {
  int id{};
  Eigen::Vector2d position{Eigen::Vector2d::Zero()};  // m
  int mvno_id{};
  double qos_max_path_loss{100.0};  // dB
  double energy_cost{};             // in [0, 1]
  bool content_request{};
  double resource_demand{1.0};

  bool operator==(const User& o) const {
    return id == o.id && position == o.position && mvno_id == o.mvno_id &&
           qos_max_path_loss == o.qos_max_path_loss && energy_cost == o.energy_cost &&
           content_request == o.content_request && resource_demand == o.resource_demand;
  }
};

// Ideal number of served users per tenant.
using TenancyTargets = Eigen::VectorXi;

enum class Norm { L1, L2 };

struct ObjectiveWeights {
  double w1{1.0};  // served users
  double w2{0.0};  // tenancy deviation penalty
  double w3{0.0};  // energy-critical reward
  double w4{0.0};  // cached-content reward
  Norm norm{Norm::L1};

  bool operator==(const ObjectiveWeights&) const = default;
};

struct PlacementRegion {
  Interval x;
  Interval y;
  Interval h;

  bool contains(const Eigen::Vector3d& p) const {
    return x.contains(p.x()) && y.contains(p.y()) && h.contains(p.z());
  }
  bool operator==(const PlacementRegion&) const = default;
};

struct Scenario {
  std::vector<User> users;
  int num_mvnos{1};
  TenancyTargets targets{TenancyTargets::Zero(1)};
  ObjectiveWeights weights;
  double capacity{1.0};
  PlacementRegion region;
  Interval field_x;  // field of interest; every user lies inside
  Interval field_y;
  Environment environment;
  ChannelConfig channel;

  bool operator==(const Scenario& o) const {
    return users == o.users && num_mvnos == o.num_mvnos && targets == o.targets &&
           weights == o.weights && capacity == o.capacity && region == o.region &&
           field_x == o.field_x && field_y == o.field_y && environment == o.environment &&
           channel == o.channel;
  }
};

// Binary service vector over scenario.users, in the same order.
struct Assignment {
  Eigen::VectorXi served;

  static Assignment none(std::size_t n) {
    return {Eigen::VectorXi::Zero(static_cast<Eigen::Index>(n))};
  }
  int served_count() const { return served.sum(); }
  bool operator==(const Assignment& o) const { return served == o.served; }
};

struct Violation {
  std::optional<int> user_id;
  std::string field;
  std::string message;
};

/// Every invariant violation in the scenario; empty means valid.
std::vector<Violation> validate(const Scenario& scenario);

std::string describe(const Violation& v);

struct ScenarioProfile {
  double qos_db{100.0};
  double resource_demand{1.0};
  double energy_cost{0.0};
  bool random_energy_cost{false};  // draw each lambda uniformly from [0, 1)
  double content_probability{0.0};
  std::optional<double> capacity;  // defaults to the number of users
  std::optional<TenancyTargets> targets;
  ObjectiveWeights weights{1.0, 1.0, 0.0, 0.0, Norm::L1};
  Interval h_bounds{1.0, 3000.0};
  ChannelConfig channel;
};

inline constexpr double kDefaultFieldSize = 2000.0;  // m

/// Even split of n users over J tenants; the first n mod J tenants get one more.
TenancyTargets even_targets(int n_users, int num_mvnos);

/// Users uniform over a field_size square centred at the origin, tenants
/// uniform over [0, J). A pure function of its arguments (mt19937_64 stream).
Scenario generate_scenario(std::uint64_t seed, int n_users, int num_mvnos, const Environment& env,
                           double field_size = kDefaultFieldSize,
                           const ScenarioProfile& profile = {});

/// Served users per tenant (the Su vector).
Eigen::VectorXi mvno_counts(const Scenario& scenario, const Assignment& assignment);

}  // namespace dronecell
