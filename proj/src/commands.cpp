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

#include "dronecell/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "dronecell/errors.hpp"
#include "dronecell/experiment.hpp"
#include "dronecell/report.hpp"
#include "dronecell/scenario_file.hpp"
#include "dronecell/solver.hpp"

namespace dronecell::cli {
namespace {

bool write_text(const std::filesystem::path& path, const std::string& text, std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    err << "error: cannot write " << path.string() << '\n';
    return false;
  }
  return true;
}

std::optional<Environment> lookup_environment(const std::string& name, std::ostream& err) {
  auto env = find_environment_preset(name);
  if (!env) {
    err << "error: unknown environment \"" << name << "\" (expected one of";
    for (const auto& p : environment_presets()) err << ' ' << p.name;
    err << ")\n";
  }
  return env;
}

}  // namespace

int cmd_solve(const std::filesystem::path& scenario_path, const std::filesystem::path& out_csv,
              const std::optional<std::filesystem::path>& svg_path, std::ostream& err) {
  Scenario scenario;
  try {
    scenario = io::read_scenario_file(scenario_path);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (const auto violations = validate(scenario); !violations.empty()) {
    for (const auto& v : violations) err << "invalid scenario: " << describe(v) << '\n';
    return kInputError;
  }

  SolveResult result;
  try {
    result = solve(scenario);
  } catch (const InfeasibleRegion& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const UnsupportedConfiguration& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  }

  std::ostringstream csv;
  report::write_solve_csv(csv, scenario, result);
  if (!write_text(out_csv, csv.str(), err)) return kInputError;
  if (svg_path && !write_text(*svg_path, report::render_svg(scenario, result), err)) {
    return kInputError;
  }
  return kSuccess;
}

int cmd_mc(const std::filesystem::path& config_path, const std::filesystem::path& out_csv,
           std::ostream& err) {
  ExperimentConfig config;
  try {
    config = io::read_config_file(config_path);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  ExperimentSummary summary;
  try {
    summary = run_experiment(config);
  } catch (const ExperimentError& e) {
    err << "experiment failed: " << e.what() << '\n';
    return kInfeasible;
  }
  std::ostringstream csv;
  report::write_experiment_csv(csv, summary);
  return write_text(out_csv, csv.str(), err) ? kSuccess : kInputError;
}

int cmd_altitude_profile(const std::string& environment, double threshold_db, double h_min,
                         double h_max, int steps, const std::filesystem::path& out_csv,
                         std::ostream& err, double carrier_frequency_hz) {
  const auto env = lookup_environment(environment, err);
  if (!env) return kInputError;
  if (!(h_min > 0 && h_min < h_max) || steps < 1 || !(threshold_db > 0) ||
      !(carrier_frequency_hz > 0)) {
    err << "error: require 0 < h_min < h_max, steps >= 1, threshold > 0, frequency > 0\n";
    return kInputError;
  }
  ChannelConfig cfg;
  cfg.carrier_frequency = carrier_frequency_hz;
  cfg.max_path_loss = threshold_db;

  const auto scan = report::altitude_scan(*env, cfg, threshold_db, h_min, h_max, steps);
  const auto optimum = optimal_altitude(threshold_db, *env, cfg, h_min, h_max);
  std::ostringstream csv;
  report::write_altitude_profile_csv(csv, scan, optimum);
  return write_text(out_csv, csv.str(), err) ? kSuccess : kInputError;
}

int cmd_gen(std::uint64_t seed, int n_users, int num_mvnos, const std::string& environment,
            const std::filesystem::path& out_path, std::ostream& err, double field_size) {
  const auto env = lookup_environment(environment, err);
  if (!env) return kInputError;
  if (n_users < 0 || num_mvnos < 1 || !(field_size > 0)) {
    err << "error: require n_users >= 0, J >= 1, field size > 0\n";
    return kInputError;
  }
  const Scenario scenario = generate_scenario(seed, n_users, num_mvnos, *env, field_size);
  return write_text(out_path, io::scenario_to_json(scenario).dump(2) + "\n", err) ? kSuccess
                                                                                  : kInputError;
}

}  // namespace dronecell::cli
