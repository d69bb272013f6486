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

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "dronecell/objective.hpp"
#include "dronecell/scenario.hpp"

namespace dronecell {

struct SolveResult {
  Eigen::Vector3d placement{Eigen::Vector3d::Zero()};  // (x, y, h) in m
  Assignment assignment;
  ObjectiveBreakdown terms;
  Eigen::VectorXi mvno_counts;
  double coverage_radius_used{};  // drone-cell radius at the default QoS threshold

  double objective() const { return terms.objective; }
  bool operator==(const SolveResult& o) const {
    return placement == o.placement && assignment == o.assignment &&
           terms.objective == o.terms.objective && mvno_counts == o.mvno_counts &&
           coverage_radius_used == o.coverage_radius_used;
  }
};

/// Indices of users whose QoS threshold holds at `placement`:
/// path_loss(h, |(x, y) - position_i|) <= q_i.
std::vector<std::size_t> covered_set(const Scenario& scenario, const Eigen::Vector3d& placement);

/// Total order used to pick among placements: higher objective, then more
/// served users, then lower altitude, then smaller x, then smaller y.
bool preferred(const SolveResult& a, const SolveResult& b);

/// Exact 3-D placement.
///
/// The drone flies at the altitude maximising per-user coverage radii (one
/// altitude per distinct QoS threshold, plus a uniform altitude sweep when
/// thresholds differ). At each altitude every maximal coverage set is
/// reached from the circle-arrangement candidates, and the best subset of
/// each distinct coverage set comes from select_users.
///
/// Throws InfeasibleRegion when the region is empty.
SolveResult solve(const Scenario& scenario);

inline constexpr std::size_t kBruteForceMaxPoints = 10'000'000;

/// Exhaustive grid search over the placement region with exact user
/// selection at every grid point. Throws ResourceGuard above
/// kBruteForceMaxPoints grid points.
SolveResult brute_force(const Scenario& scenario, double grid_step_xy, double grid_step_h);

namespace detail {

// Grid coordinates min, min + step, ... up to max (inclusive within 1e-9 steps).
std::vector<double> axis_grid(const Interval& axis, double step);

// Builds a SolveResult for a fixed placement and assignment.
SolveResult make_result(const Scenario& scenario, const Eigen::Vector3d& placement,
                        Assignment assignment);

// Coverage radius reported alongside a placement at altitude h.
double reported_radius(const Scenario& scenario, double h);

void check_region(const PlacementRegion& region);

// preferred() on the raw keys.
bool preferred_key(double objective_a, double served_a, const Eigen::Vector3d& placement_a,
                   double objective_b, double served_b, const Eigen::Vector3d& placement_b);

}  // namespace detail

}  // namespace dronecell
