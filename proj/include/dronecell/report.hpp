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

#include <iosfwd>
#include <string>
#include <vector>

#include "dronecell/channel.hpp"
#include "dronecell/experiment.hpp"
#include "dronecell/scenario.hpp"
#include "dronecell/solver.hpp"

namespace dronecell::report {

/// Six significant digits, '.' decimal separator regardless of locale.
std::string format_number(double v);

/// Header plus one row: x,y,h,radius,objective,t1..t4,count_0..count_{J-1},served_ids.
void write_solve_csv(std::ostream& out, const Scenario& scenario, const SolveResult& result);

/// Header plus one row per (environment, policy):
/// environment,policy,mean_total,std_total,mean_per_mvno_0..J-1,runs.
void write_experiment_csv(std::ostream& out, const ExperimentSummary& summary);

struct AltitudeSample {
  double h{};
  double radius{};
};

/// Coverage radius on a uniform altitude scan of `steps` intervals.
std::vector<AltitudeSample> altitude_scan(const Environment& env, const ChannelConfig& cfg,
                                          double threshold, double h_min, double h_max,
                                          int steps);

/// kind,h,coverage_radius rows: "scan" per sample, then one "optimum" row.
void write_altitude_profile_csv(std::ostream& out, const std::vector<AltitudeSample>& scan,
                                const AltitudeOptimum& optimum);

/// Placement diagram: users as dots coloured by tenant (filled iff served),
/// one coverage circle, and a drone marker. One SVG unit is one metre.
std::string render_svg(const Scenario& scenario, const SolveResult& result);

}  // namespace dronecell::report
