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

#include "dronecell/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace dronecell {
namespace {

struct RunOutcome {
  double total{};
  Eigen::VectorXd counts;
  double objective{};
};

struct Accumulator {
  int n{};
  double sum{};
  double sum_sq{};

  void add(double v) {
    ++n;
    sum += v;
    sum_sq += v * v;
  }
  double mean() const { return n > 0 ? sum / n : 0.0; }
  double stddev() const {
    if (n < 2) return 0.0;
    const double m = mean();
    return std::sqrt(std::max(0.0, (sum_sq - n * m * m) / (n - 1)));
  }
};

}  // namespace

std::string_view to_string(Policy policy) {
  switch (policy) {
    case Policy::SingleTenancy:
      return "single_tenancy";
    case Policy::MultiTenancyNoFairness:
      return "multi_tenancy_no_fairness";
    case Policy::MultiTenancyDmf:
      return "multi_tenancy_dmf";
  }
  return "unknown";
}

std::optional<Policy> parse_policy(std::string_view name) {
  for (auto p : {Policy::SingleTenancy, Policy::MultiTenancyNoFairness, Policy::MultiTenancyDmf}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

SolveResult run_policy(const Scenario& scenario, Policy policy) {
  Scenario policy_scenario = scenario;
  switch (policy) {
    case Policy::SingleTenancy:
    case Policy::MultiTenancyNoFairness:
      policy_scenario.weights.w2 = 0.0;
      break;
    case Policy::MultiTenancyDmf:
      break;
    default:
      throw std::invalid_argument("run_policy: unknown policy");
  }
  if (policy != Policy::SingleTenancy) return solve(policy_scenario);

  Scenario reduced = policy_scenario;
  reduced.users.clear();
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < scenario.users.size(); ++i) {
    if (scenario.users[i].mvno_id == 0) {
      reduced.users.push_back(scenario.users[i]);
      kept.push_back(i);
    }
  }
  const SolveResult partial = solve(reduced);
  Assignment full = Assignment::none(scenario.users.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    full.served(static_cast<Eigen::Index>(kept[k])) =
        partial.assignment.served(static_cast<Eigen::Index>(k));
  }
  return detail::make_result(policy_scenario, partial.placement, std::move(full));
}

const ExperimentRow& ExperimentSummary::at(std::string_view environment, Policy policy) const {
  for (const auto& row : rows) {
    if (row.environment == environment && row.policy == policy) return row;
  }
  throw std::out_of_range("ExperimentSummary: no row for " + std::string(environment) + "/" +
                          std::string(to_string(policy)));
}

std::vector<std::string> config_problems(const ExperimentConfig& c) {
  std::vector<std::string> out;
  if (c.n_runs < 1) out.emplace_back("n_runs must be >= 1");
  if (c.n_users < 0) out.emplace_back("n_users must be >= 0");
  if (c.num_mvnos < 1) out.emplace_back("num_mvnos must be >= 1");
  if (c.environments.empty()) out.emplace_back("environments must be non-empty");
  if (c.policies.empty()) out.emplace_back("policies must be non-empty");
  if (!(c.field_size > 0)) out.emplace_back("field_size must be > 0");
  if (c.workers < 0) out.emplace_back("workers must be >= 0");
  return out;
}

Scenario experiment_scenario(const ExperimentConfig& c, const Environment& env, int run) {
  return generate_scenario(c.seed + static_cast<std::uint64_t>(run), c.n_users, c.num_mvnos, env,
                           c.field_size, c.profile);
}

ExperimentSummary run_experiment(const ExperimentConfig& c) {
  if (const auto problems = config_problems(c); !problems.empty()) {
    throw std::invalid_argument("run_experiment: " + problems.front());
  }
  const std::size_t n_env = c.environments.size();
  const std::size_t n_pol = c.policies.size();
  const auto n_runs = static_cast<std::size_t>(c.n_runs);
  const std::size_t n_tasks = n_env * n_runs;

  // outcomes[(env * n_runs + run) * n_pol + policy]
  std::vector<RunOutcome> outcomes(n_tasks * n_pol);
  std::atomic<std::size_t> next_task{0};
  std::exception_ptr failure;
  std::size_t failed_task = n_tasks;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t task = next_task++; task < n_tasks; task = next_task++) {
      const std::size_t e = task / n_runs;
      const int run = static_cast<int>(task % n_runs);
      try {
        const Scenario scenario = experiment_scenario(c, c.environments[e], run);
        for (std::size_t p = 0; p < n_pol; ++p) {
          const SolveResult r = run_policy(scenario, c.policies[p]);
          outcomes[task * n_pol + p] = {r.terms.served, r.mvno_counts.cast<double>(),
                                        r.terms.objective};
        }
      } catch (const std::exception& ex) {
        std::lock_guard lock(failure_mutex);
        if (task < failed_task) {
          failed_task = task;
          failure = std::make_exception_ptr(ExperimentError(run, ex.what()));
        }
      }
    }
  };

  unsigned n_workers = c.workers > 0 ? static_cast<unsigned>(c.workers)
                                     : std::max(1U, std::thread::hardware_concurrency());
  n_workers = static_cast<unsigned>(std::min<std::size_t>(n_workers, n_tasks));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentSummary summary;
  summary.num_mvnos = c.num_mvnos;
  summary.n_users = c.n_users;
  const auto J = static_cast<std::size_t>(c.num_mvnos);
  for (std::size_t e = 0; e < n_env; ++e) {
    for (std::size_t p = 0; p < n_pol; ++p) {
      Accumulator total;
      Accumulator objective;
      std::vector<Accumulator> per_mvno(J);
      std::vector<Accumulator> share(J);
      for (std::size_t r = 0; r < n_runs; ++r) {
        const RunOutcome& o = outcomes[((e * n_runs) + r) * n_pol + p];
        total.add(o.total);
        objective.add(o.objective);
        const double served = o.counts.sum();
        for (std::size_t j = 0; j < J; ++j) {
          const double count = o.counts(static_cast<Eigen::Index>(j));
          per_mvno[j].add(count);
          if (served > 0) share[j].add(count / served);
        }
      }
      ExperimentRow row;
      row.environment = c.environments[e].name;
      row.policy = c.policies[p];
      row.runs = c.n_runs;
      row.mean_total = total.mean();
      row.std_total = total.stddev();
      row.mean_objective = objective.mean();
      row.std_objective = objective.stddev();
      row.mean_per_mvno.resize(static_cast<Eigen::Index>(J));
      row.std_per_mvno.resize(static_cast<Eigen::Index>(J));
      row.mean_cost_share.resize(static_cast<Eigen::Index>(J));
      for (std::size_t j = 0; j < J; ++j) {
        row.mean_per_mvno(static_cast<Eigen::Index>(j)) = per_mvno[j].mean();
        row.std_per_mvno(static_cast<Eigen::Index>(j)) = per_mvno[j].stddev();
        row.mean_cost_share(static_cast<Eigen::Index>(j)) = share[j].mean();
      }
      summary.rows.push_back(std::move(row));
    }
  }
  return summary;
}

}  // namespace dronecell
