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

// Versioned JSON documents for scenarios and Monte Carlo configs.
//
// Scenario layout (version "1"):
//   meta        {version}
//   environment {name, a?, b?, eta_los_db?, eta_nlos_db?}  explicit values override the preset
//   channel     {frequency_hz, default_max_path_loss_db}
//   field       {x: [min, max], y: [min, max]}              optional, defaults to the region
//   region      {x: [min, max], y: [min, max], h: [min, max]}
//   tenancy     {J, targets}
//   weights     {w1, w2, w3, w4, norm: "L1" | "L2"}
//   capacity
//   users       [{id, x, y, mvno, q_db?, lambda?, kappa?, r?}]

#include <filesystem>
#include <string>

#include "json.hpp"

#include "dronecell/experiment.hpp"
#include "dronecell/scenario.hpp"

namespace dronecell::io {

inline constexpr const char* kSchemaVersion = "1";

nlohmann::json environment_to_json(const Environment& env);
Environment environment_from_json(const nlohmann::json& j);

nlohmann::json scenario_to_json(const Scenario& scenario);
// Throws InputError on missing or mistyped fields. Does not run validate().
Scenario scenario_from_json(const nlohmann::json& j);

Scenario read_scenario_file(const std::filesystem::path& path);
void write_scenario_file(const std::filesystem::path& path, const Scenario& scenario);

// Monte Carlo config: {n_runs, n_users, num_mvnos, seed, environments, policies,
// field_size_m, max_path_loss_db, carrier_frequency_hz, h_bounds, weights, workers}.
// Every key is optional and defaults to ExperimentConfig{}.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig read_config_file(const std::filesystem::path& path);

}  // namespace dronecell::io
