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

#include <Eigen/Core>

#include "dronecell/scenario.hpp"

namespace dronecell {

/// Objective terms for one assignment:
///   served      = sum u_i
///   deviation   = ||Su - v||   (penalised)
///   energy      = sum u_i lambda_i
///   content     = sum u_i kappa_i
struct ObjectiveBreakdown {
  double objective{};
  double served{};
  double deviation{};
  double energy{};
  double content{};
};

// Objective values closer than this compare equal in every tie-break.
inline constexpr double kObjectiveEpsilon = 1e-9;

/// ||counts - targets|| under the chosen norm.
template <typename Derived>
double tenancy_deviation(const Eigen::MatrixBase<Derived>& counts, const TenancyTargets& targets,
                         Norm norm) {
  const Eigen::VectorXd diff = (counts.template cast<double>() - targets.cast<double>());
  return norm == Norm::L1 ? diff.template lpNorm<1>() : diff.norm();
}

/// w1*served - w2*deviation + w3*energy + w4*content.
ObjectiveBreakdown objective_value(const Scenario& scenario, const Assignment& assignment);

}  // namespace dronecell
