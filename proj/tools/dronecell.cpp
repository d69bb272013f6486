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

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "dronecell/commands.hpp"

int main(int argc, char** argv) {
  namespace dc = dronecell::cli;

  CLI::App app{"Drone-cell 3-D placement engine"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_path;
  std::string svg_path;
  auto* solve = app.add_subcommand("solve", "Place one drone-cell for a scenario file");
  solve->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  solve->add_option("--out", out_path, "Result CSV")->required();
  solve->add_option("--svg", svg_path, "Placement diagram");

  std::string config_path;
  auto* mc = app.add_subcommand("mc", "Monte Carlo tenancy-policy comparison");
  mc->add_option("config", config_path, "Experiment config JSON")->required();
  mc->add_option("--out", out_path, "Summary CSV")->required();

  std::string env_name = "urban";
  double threshold = 100.0;
  double h_min = 1.0;
  double h_max = 3000.0;
  int steps = 300;
  double frequency = 2.0e9;
  auto* profile = app.add_subcommand("altitude-profile", "Coverage radius versus altitude");
  profile->add_option("env", env_name, "Environment preset")->required();
  profile->add_option("threshold_db", threshold, "Maximum tolerable path loss (dB)")->required();
  profile->add_option("h_min", h_min, "Lowest altitude (m)")->required();
  profile->add_option("h_max", h_max, "Highest altitude (m)")->required();
  profile->add_option("steps", steps, "Number of scan intervals")->required();
  profile->add_option("--frequency", frequency, "Carrier frequency (Hz)");
  profile->add_option("--out", out_path, "Profile CSV")->required();

  std::uint64_t seed = 0;
  int n_users = 24;
  int num_mvnos = 2;
  double field_size = 2000.0;
  auto* gen = app.add_subcommand("gen", "Generate a random scenario file");
  gen->add_option("seed", seed, "RNG seed")->required();
  gen->add_option("n_users", n_users, "Number of users")->required();
  gen->add_option("J", num_mvnos, "Number of tenants")->required();
  gen->add_option("env", env_name, "Environment preset")->required();
  gen->add_option("--field-size", field_size, "Side of the square field (m)");
  gen->add_option("--out", out_path, "Scenario JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? dc::kSuccess : dc::kInputError;
  }

  try {
    if (*solve) {
      return dc::cmd_solve(scenario_path, out_path,
                           svg_path.empty() ? std::nullopt : std::optional<std::string>(svg_path),
                           std::cerr);
    }
    if (*mc) return dc::cmd_mc(config_path, out_path, std::cerr);
    if (*profile) {
      return dc::cmd_altitude_profile(env_name, threshold, h_min, h_max, steps, out_path,
                                      std::cerr, frequency);
    }
    if (*gen) {
      return dc::cmd_gen(seed, n_users, num_mvnos, env_name, out_path, std::cerr, field_size);
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return dc::kInternalError;
  }
  return dc::kInternalError;
}
