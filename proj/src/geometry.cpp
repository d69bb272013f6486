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

#include "dronecell/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace dronecell::geometry {
namespace {

// Points this close outside the box are clamped onto it.
constexpr double kBoxSlack = 1e-9;

bool near_box(const Eigen::Vector2d& p, const Interval& x, const Interval& y) {
  return p.x() >= x.min - kBoxSlack && p.x() <= x.max + kBoxSlack && p.y() >= y.min - kBoxSlack &&
         p.y() <= y.max + kBoxSlack;
}

Eigen::Vector2d clamp_to(const Eigen::Vector2d& p, const Interval& x, const Interval& y) {
  return {std::clamp(p.x(), x.min, x.max), std::clamp(p.y(), y.min, y.max)};
}

}  // namespace

Points circle_intersections(const Eigen::Vector2d& c1, double r1, const Eigen::Vector2d& c2,
                            double r2) {
  const Eigen::Vector2d delta = c2 - c1;
  const double d = delta.norm();
  if (d == 0.0 || d > r1 + r2 || d < std::abs(r1 - r2)) return {};

  const double a = (r1 * r1 - r2 * r2 + d * d) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, r1 * r1 - a * a));
  const Eigen::Vector2d unit = delta / d;
  const Eigen::Vector2d base = c1 + a * unit;
  const Eigen::Vector2d perp(-unit.y(), unit.x());
  if (h == 0.0) return {base};
  return {base + h * perp, base - h * perp};
}

Points circle_box_intersections(const Eigen::Vector2d& c, double r, const Interval& x,
                                const Interval& y) {
  Points out;
  for (double edge : {x.min, x.max}) {
    const double dx = edge - c.x();
    const double disc = r * r - dx * dx;
    if (disc < 0.0) continue;
    const double s = std::sqrt(disc);
    for (double py : {c.y() - s, c.y() + s}) {
      if (y.contains(py)) out.emplace_back(edge, py);
    }
  }
  for (double edge : {y.min, y.max}) {
    const double dy = edge - c.y();
    const double disc = r * r - dy * dy;
    if (disc < 0.0) continue;
    const double s = std::sqrt(disc);
    for (double px : {c.x() - s, c.x() + s}) {
      if (x.contains(px)) out.emplace_back(px, edge);
    }
  }
  return out;
}

Points candidate_centers(const Eigen::Matrix2Xd& centers, const Eigen::VectorXd& radii,
                         const Interval& x, const Interval& y) {
  Points out{{x.min, y.min}, {x.min, y.max}, {x.max, y.min}, {x.max, y.max}};
  const Eigen::Index n = centers.cols();

  for (Eigen::Index i = 0; i < n; ++i) {
    if (radii(i) <= 0.0) continue;
    const Eigen::Vector2d ci = centers.col(i);
    if (near_box(ci, x, y)) out.push_back(clamp_to(ci, x, y));
    for (const auto& p : circle_box_intersections(ci, radii(i), x, y)) out.push_back(p);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (radii(j) <= 0.0) continue;
      for (const auto& p : circle_intersections(ci, radii(i), centers.col(j), radii(j))) {
        if (near_box(p, x, y)) out.push_back(clamp_to(p, x, y));
      }
    }
  }
  return out;
}

}  // namespace dronecell::geometry
