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

#include "dronecell/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "coverage_cache.hpp"
#include "dronecell/channel.hpp"
#include "dronecell/errors.hpp"
#include "dronecell/geometry.hpp"

namespace dronecell {
namespace {

// Candidate circles are drawn this much inside the coverage radius so that
// their intersection points are strictly covered.
constexpr double kCircleShrink = 1e-6;  // m
// Geometric prefilter margin; the exact test is always the path loss.
constexpr double kPrefilterMargin = 0.01;  // m
// Extra altitudes swept when users carry different QoS thresholds.
constexpr int kHeterogeneousAltitudeIntervals = 64;

std::vector<double> candidate_altitudes(const Scenario& s) {
  std::set<double> thresholds;
  for (const auto& u : s.users) thresholds.insert(u.qos_max_path_loss);
  if (thresholds.empty()) thresholds.insert(s.channel.max_path_loss);

  const Interval& hb = s.region.h;
  std::vector<double> out;
  for (double q : thresholds) {
    if (hb.min < hb.max) {
      out.push_back(optimal_altitude(q, s.environment, s.channel, hb.min, hb.max).h_star);
    } else {
      out.push_back(hb.min);
    }
  }
  if (thresholds.size() > 1 && hb.min < hb.max) {
    for (int k = 0; k <= kHeterogeneousAltitudeIntervals; ++k) {
      out.push_back(k == kHeterogeneousAltitudeIntervals
                        ? hb.max
                        : hb.min + hb.width() * k / kHeterogeneousAltitudeIntervals);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

namespace detail {

void check_region(const PlacementRegion& region) {
  if (!(region.x.min <= region.x.max && region.y.min <= region.y.max &&
        region.h.min <= region.h.max)) {
    throw InfeasibleRegion("placement region is empty");
  }
  if (!(region.h.min > 0)) throw InfeasibleRegion("placement region has no positive altitude");
}

bool preferred_key(double objective_a, double served_a, const Eigen::Vector3d& placement_a,
                   double objective_b, double served_b, const Eigen::Vector3d& placement_b) {
  if (objective_a > objective_b + kObjectiveEpsilon) return true;
  if (objective_a < objective_b - kObjectiveEpsilon) return false;
  if (served_a != served_b) return served_a > served_b;
  if (placement_a.z() != placement_b.z()) return placement_a.z() < placement_b.z();
  if (placement_a.x() != placement_b.x()) return placement_a.x() < placement_b.x();
  return placement_a.y() < placement_b.y();
}

double reported_radius(const Scenario& s, double h) {
  double q = s.channel.max_path_loss;
  if (!s.users.empty()) {
    const double first = s.users.front().qos_max_path_loss;
    const bool uniform = std::all_of(s.users.begin(), s.users.end(), [&](const User& u) {
      return u.qos_max_path_loss == first;
    });
    if (uniform) q = first;
  }
  return coverage_radius(h, q, s.environment, s.channel);
}

SolveResult make_result(const Scenario& s, const Eigen::Vector3d& placement,
                        Assignment assignment) {
  SolveResult r;
  r.placement = placement;
  r.terms = objective_value(s, assignment);
  r.mvno_counts = mvno_counts(s, assignment);
  r.assignment = std::move(assignment);
  r.coverage_radius_used = reported_radius(s, placement.z());
  return r;
}

std::vector<double> axis_grid(const Interval& axis, double step) {
  const auto n = static_cast<std::size_t>(std::floor(axis.width() / step + 1e-9)) + 1;
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = axis.min + step * static_cast<double>(k);
  return out;
}

}  // namespace detail

std::vector<std::size_t> covered_set(const Scenario& s, const Eigen::Vector3d& placement) {
  std::vector<std::size_t> out;
  const double h = placement.z();
  for (std::size_t i = 0; i < s.users.size(); ++i) {
    const auto& u = s.users[i];
    const double r = (u.position - placement.head<2>()).norm();
    if (path_loss(h, r, s.environment, s.channel) <= u.qos_max_path_loss) out.push_back(i);
  }
  return out;
}

bool preferred(const SolveResult& a, const SolveResult& b) {
  return detail::preferred_key(a.terms.objective, a.terms.served, a.placement, b.terms.objective,
                               b.terms.served, b.placement);
}

SolveResult solve(const Scenario& s) {
  detail::check_region(s.region);
  const auto n = static_cast<Eigen::Index>(s.users.size());

  Eigen::Matrix2Xd positions(2, n);
  for (Eigen::Index i = 0; i < n; ++i) positions.col(i) = s.users[static_cast<std::size_t>(i)].position;

  detail::SelectionCache cache(s);
  const detail::SelectionCache::Entry* best = nullptr;
  Eigen::Vector3d best_p = Eigen::Vector3d::Zero();

  std::vector<std::size_t> covered;
  for (double h : candidate_altitudes(s)) {
    Eigen::VectorXd radii(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      radii(i) = coverage_radius(h, s.users[static_cast<std::size_t>(i)].qos_max_path_loss,
                                 s.environment, s.channel, kOptimizerRadiusTolerance);
    }
    const Eigen::VectorXd shrunk = (radii.array() - kCircleShrink).max(0.0).matrix();
    const auto centers = geometry::candidate_centers(positions, shrunk, s.region.x, s.region.y);

    for (const auto& c : centers) {
      covered.clear();
      for (Eigen::Index i = 0; i < n; ++i) {
        const double r = (positions.col(i) - c).norm();
        if (r > radii(i) + kPrefilterMargin) continue;
        const auto& u = s.users[static_cast<std::size_t>(i)];
        if (path_loss(h, r, s.environment, s.channel) <= u.qos_max_path_loss) {
          covered.push_back(static_cast<std::size_t>(i));
        }
      }
      const auto& entry = cache.lookup(covered);
      const Eigen::Vector3d p(c.x(), c.y(), h);
      if (best == nullptr ||
          detail::preferred_key(entry.terms.objective, entry.terms.served, p,
                                best->terms.objective, best->terms.served, best_p)) {
        best = &entry;
        best_p = p;
      }
    }
  }
  return detail::make_result(s, best_p, best->assignment);
}

}  // namespace dronecell
