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

#include <vector>

#include <Eigen/Core>

#include "dronecell/scenario.hpp"

namespace dronecell::geometry {

using Points = std::vector<Eigen::Vector2d>;

/// Intersection points of two circles (0, 1 or 2 points). Concentric or
/// disjoint circles yield none.
Points circle_intersections(const Eigen::Vector2d& c1, double r1, const Eigen::Vector2d& c2,
                            double r2);

/// Points where a circle crosses the boundary of an axis-aligned box.
Points circle_box_intersections(const Eigen::Vector2d& c, double r, const Interval& x,
                                const Interval& y);

/// Candidate disk centres inside the box that realise every maximal set of
/// circles containing a common point: circle centres, pairwise circle
/// intersections, circle/box-edge crossings and box corners. Circles with
/// radius <= 0 are ignored. Columns of `centers` pair with `radii`.
Points candidate_centers(const Eigen::Matrix2Xd& centers, const Eigen::VectorXd& radii,
                         const Interval& x, const Interval& y);

}  // namespace dronecell::geometry
