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

#include "dronecell/selection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dronecell/errors.hpp"
#include "dronecell/objective.hpp"

namespace dronecell {
namespace {

constexpr std::size_t kMaxStates = std::size_t{1} << 22;
constexpr int kMaxFairTenants = 3;
constexpr double kCapacitySlack = 1e-9;

struct Cell {
  double value{};
  int served{};
  bool valid{};
};

// Smaller sorted id list wins; sets are bitmasks over the id-sorted eligible list.
bool lex_less(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    const std::uint64_t diff = a[w] ^ b[w];
    if (diff != 0) return (a[w] & (diff & (~diff + 1))) != 0;
  }
  return false;
}

bool better(double value_a, int served_a, const std::uint64_t* bits_a, double value_b,
            int served_b, const std::uint64_t* bits_b, std::size_t words) {
  if (value_a > value_b + kObjectiveEpsilon) return true;
  if (value_a < value_b - kObjectiveEpsilon) return false;
  if (served_a != served_b) return served_a > served_b;
  return lex_less(bits_a, bits_b, words);
}

struct ResourceScale {
  std::vector<std::int64_t> demand;
  std::int64_t capacity{};
};

ResourceScale scale_resources(const std::vector<double>& demand, double capacity) {
  double scale = 1.0;
  for (int k = 0; k <= 6; ++k, scale *= 10.0) {
    bool integral = true;
    for (double r : demand) {
      const double s = r * scale;
      if (std::abs(s - std::round(s)) > 1e-9 * std::max(1.0, s)) {
        integral = false;
        break;
      }
    }
    if (!integral) continue;
    ResourceScale out;
    out.demand.reserve(demand.size());
    for (double r : demand) out.demand.push_back(std::llround(r * scale));
    const double cap = std::floor(capacity * scale + 1e-9);
    if (cap + 1.0 > static_cast<double>(kMaxStates)) {
      throw UnsupportedConfiguration("select_users: scaled capacity exceeds the state guard");
    }
    out.capacity = static_cast<std::int64_t>(cap);
    return out;
  }
  throw UnsupportedConfiguration(
      "select_users: resource demands are not integral after scaling by 10^6");
}

}  // namespace

Assignment select_users(const Scenario& scenario, std::span<const std::size_t> eligible) {
  const std::size_t n_users = scenario.users.size();
  std::vector<std::size_t> order(eligible.begin(), eligible.end());
  for (std::size_t i : order) {
    if (i >= n_users) throw std::invalid_argument("select_users: eligible index out of range");
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scenario.users[a].id < scenario.users[b].id;
  });
  order.erase(std::unique(order.begin(), order.end()), order.end());

  Assignment result = Assignment::none(n_users);
  if (order.empty()) return result;

  const auto& w = scenario.weights;
  const int num_mvnos = scenario.num_mvnos;
  const bool fairness = w.w2 > 0;
  if (fairness && num_mvnos > kMaxFairTenants) {
    throw UnsupportedConfiguration("select_users: fairness with more than 3 tenants");
  }

  const std::size_t m = order.size();
  const std::size_t words = (m + 63) / 64;

  // Count dimension: mixed radix over (eligible users of tenant j) + 1.
  std::vector<std::size_t> radix(static_cast<std::size_t>(num_mvnos), 1);
  if (fairness) {
    for (std::size_t i : order) radix[static_cast<std::size_t>(scenario.users[i].mvno_id)] += 1;
  }
  std::vector<std::size_t> stride(radix.size(), 1);
  std::size_t count_states = 1;
  for (std::size_t j = 0; j < radix.size(); ++j) {
    stride[j] = count_states;
    count_states *= radix[j];
    if (count_states > kMaxStates) {
      throw UnsupportedConfiguration("select_users: count state space too large");
    }
  }

  std::vector<double> demand;
  demand.reserve(m);
  double total_demand = 0.0;
  for (std::size_t i : order) {
    demand.push_back(scenario.users[i].resource_demand);
    total_demand += scenario.users[i].resource_demand;
  }
  ResourceScale res;
  if (total_demand <= scenario.capacity + kCapacitySlack) {
    res.demand.assign(m, 0);
    res.capacity = 0;
  } else {
    res = scale_resources(demand, scenario.capacity);
  }
  const auto res_states = static_cast<std::size_t>(res.capacity) + 1;
  if (count_states * res_states > kMaxStates) {
    throw UnsupportedConfiguration("select_users: state table exceeds the size guard");
  }
  const std::size_t states = count_states * res_states;

  std::vector<Cell> cur(states);
  std::vector<std::uint64_t> cur_bits(states * words, 0);
  cur[0] = {0.0, 0, true};
  std::vector<Cell> next;
  std::vector<std::uint64_t> next_bits;

  for (std::size_t k = 0; k < m; ++k) {
    const auto& user = scenario.users[order[k]];
    const double gain = w.w1 + w.w3 * user.energy_cost + w.w4 * (user.content_request ? 1.0 : 0.0);
    const std::size_t count_step =
        fairness ? stride[static_cast<std::size_t>(user.mvno_id)] * res_states : 0;
    const auto need = static_cast<std::size_t>(res.demand[k]);
    const std::uint64_t bit = std::uint64_t{1} << (k % 64);

    next = cur;
    next_bits = cur_bits;
    std::vector<std::uint64_t> cand(words);
    for (std::size_t s = 0; s < states; ++s) {
      if (!cur[s].valid) continue;
      const std::size_t used = s % res_states;
      if (used + need >= res_states) continue;
      const std::size_t t = s + count_step + need;

      std::copy_n(&cur_bits[s * words], words, cand.begin());
      cand[k / 64] |= bit;
      const double value = cur[s].value + gain;
      const int served = cur[s].served + 1;
      if (!next[t].valid ||
          better(value, served, cand.data(), next[t].value, next[t].served,
                 &next_bits[t * words], words)) {
        next[t] = {value, served, true};
        std::copy_n(cand.begin(), words, &next_bits[t * words]);
      }
    }
    cur.swap(next);
    cur_bits.swap(next_bits);
  }

  std::size_t best = states;
  double best_objective = 0.0;
  Eigen::VectorXi counts = Eigen::VectorXi::Zero(num_mvnos);
  for (std::size_t s = 0; s < states; ++s) {
    if (!cur[s].valid) continue;
    double objective = cur[s].value;
    if (fairness) {
      const std::size_t count_index = s / res_states;
      for (std::size_t j = 0; j < radix.size(); ++j) {
        counts(static_cast<Eigen::Index>(j)) = static_cast<int>((count_index / stride[j]) % radix[j]);
      }
      objective -= w.w2 * tenancy_deviation(counts, scenario.targets, w.norm);
    }
    if (best == states || better(objective, cur[s].served, &cur_bits[s * words], best_objective,
                                 cur[best].served, &cur_bits[best * words], words)) {
      best = s;
      best_objective = objective;
    }
  }

  for (std::size_t k = 0; k < m; ++k) {
    if ((cur_bits[best * words + k / 64] >> (k % 64)) & 1U) {
      result.served(static_cast<Eigen::Index>(order[k])) = 1;
    }
  }
  return result;
}

}  // namespace dronecell
