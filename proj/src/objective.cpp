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

#include "dronecell/objective.hpp"

namespace dronecell {

ObjectiveBreakdown objective_value(const Scenario& scenario, const Assignment& assignment) {
  const Eigen::VectorXi counts = mvno_counts(scenario, assignment);

  ObjectiveBreakdown b;
  for (std::size_t i = 0; i < scenario.users.size(); ++i) {
    if (assignment.served(static_cast<Eigen::Index>(i)) == 0) continue;
    const auto& u = scenario.users[i];
    b.served += 1.0;
    b.energy += u.energy_cost;
    b.content += u.content_request ? 1.0 : 0.0;
  }
  b.deviation = tenancy_deviation(counts, scenario.targets, scenario.weights.norm);

  const auto& w = scenario.weights;
  b.objective = w.w1 * b.served - w.w2 * b.deviation + w.w3 * b.energy + w.w4 * b.content;
  return b;
}

}  // namespace dronecell
