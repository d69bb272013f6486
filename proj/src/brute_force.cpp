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

#include <stdexcept>

#include "coverage_cache.hpp"
#include "dronecell/errors.hpp"
#include "dronecell/solver.hpp"

namespace dronecell {

SolveResult brute_force(const Scenario& s, double grid_step_xy, double grid_step_h) {
  if (!(grid_step_xy > 0 && grid_step_h > 0)) {
    throw std::invalid_argument("brute_force: grid steps must be positive");
  }
  detail::check_region(s.region);

  const auto xs = detail::axis_grid(s.region.x, grid_step_xy);
  const auto ys = detail::axis_grid(s.region.y, grid_step_xy);
  const auto hs = detail::axis_grid(s.region.h, grid_step_h);
  const double points = static_cast<double>(xs.size()) * static_cast<double>(ys.size()) *
                        static_cast<double>(hs.size());
  if (points > static_cast<double>(kBruteForceMaxPoints)) {
    throw ResourceGuard("brute_force: grid has more than 1e7 points");
  }

  detail::SelectionCache cache(s);
  const detail::SelectionCache::Entry* best = nullptr;
  Eigen::Vector3d best_p = Eigen::Vector3d::Zero();
  for (double h : hs) {
    for (double x : xs) {
      for (double y : ys) {
        const Eigen::Vector3d p(x, y, h);
        const auto& entry = cache.lookup(covered_set(s, p));
        if (best == nullptr ||
            detail::preferred_key(entry.terms.objective, entry.terms.served, p,
                                  best->terms.objective, best->terms.served, best_p)) {
          best = &entry;
          best_p = p;
        }
      }
    }
  }
  return detail::make_result(s, best_p, best->assignment);
}

}  // namespace dronecell
