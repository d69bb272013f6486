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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace dronecell::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kInfeasible = 2,
  kInternalError = 3,
};

// Each command reports problems on `err` and returns an ExitCode. Output files
// are only written once the whole computation has succeeded.

int cmd_solve(const std::filesystem::path& scenario_path, const std::filesystem::path& out_csv,
              const std::optional<std::filesystem::path>& svg_path, std::ostream& err);

int cmd_mc(const std::filesystem::path& config_path, const std::filesystem::path& out_csv,
           std::ostream& err);

int cmd_altitude_profile(const std::string& environment, double threshold_db, double h_min,
                         double h_max, int steps, const std::filesystem::path& out_csv,
                         std::ostream& err, double carrier_frequency_hz = 2.0e9);

int cmd_gen(std::uint64_t seed, int n_users, int num_mvnos, const std::string& environment,
            const std::filesystem::path& out_path, std::ostream& err,
            double field_size = 2000.0);

}  // namespace dronecell::cli
