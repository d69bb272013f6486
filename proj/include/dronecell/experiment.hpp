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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "dronecell/scenario.hpp"
#include "dronecell/solver.hpp"

namespace dronecell {

enum class Policy {
  SingleTenancy,           // only tenant 0 users, no fairness term
  MultiTenancyNoFairness,  // all users, w2 = 0
  MultiTenancyDmf,         // all users, weights as configured
};

std::string_view to_string(Policy policy);
std::optional<Policy> parse_policy(std::string_view name);

/// Solves the scenario under a tenancy policy. The returned assignment and
/// counts always span the full user list; users excluded by the policy are
/// unserved.
SolveResult run_policy(const Scenario& scenario, Policy policy);

struct ExperimentConfig {
  int n_runs{100};
  int n_users{30};
  int num_mvnos{2};
  std::vector<Environment> environments{environment_presets().begin(),
                                        environment_presets().end()};
  std::uint64_t seed{1};
  std::vector<Policy> policies{Policy::SingleTenancy, Policy::MultiTenancyNoFairness,
                               Policy::MultiTenancyDmf};
  double field_size{kDefaultFieldSize};
  ScenarioProfile profile;
  int workers{0};  // 0 = hardware concurrency; never changes the results
};

struct ExperimentRow {
  std::string environment;
  Policy policy{};
  int runs{};
  double mean_total{};
  double std_total{};
  Eigen::VectorXd mean_per_mvno;
  Eigen::VectorXd std_per_mvno;
  double mean_objective{};
  double std_objective{};
  // Mean of count_j / sum(counts) over runs with anyone served.
  Eigen::VectorXd mean_cost_share;
};

struct ExperimentSummary {
  int num_mvnos{};
  int n_users{};
  std::vector<ExperimentRow> rows;  // environment-major, policy order as configured

  const ExperimentRow& at(std::string_view environment, Policy policy) const;
};

class ExperimentError : public std::runtime_error {
 public:
  ExperimentError(int run_index, const std::string& what)
      : std::runtime_error("run " + std::to_string(run_index) + ": " + what),
        run_index_(run_index) {}
  int run_index() const { return run_index_; }

 private:
  int run_index_;
};

/// The scenario used by run r in environment env (seed + r).
Scenario experiment_scenario(const ExperimentConfig& config, const Environment& env, int run);

/// Monte Carlo over runs and environments. Run r uses seed + r and every
/// policy sees the same scenario within a run. Deterministic for a given
/// config regardless of `workers`.
ExperimentSummary run_experiment(const ExperimentConfig& config);

std::vector<std::string> config_problems(const ExperimentConfig& config);

}  // namespace dronecell
