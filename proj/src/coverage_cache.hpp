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
#include <unordered_map>
#include <vector>

#include "dronecell/objective.hpp"
#include "dronecell/scenario.hpp"
#include "dronecell/selection.hpp"

namespace dronecell::detail {

struct MaskHash {
  std::size_t operator()(const std::vector<std::uint64_t>& mask) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : mask) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Best selection for each distinct coverage set seen so far.
class SelectionCache {
 public:
  struct Entry {
    Assignment assignment;
    ObjectiveBreakdown terms;
  };

  explicit SelectionCache(const Scenario& scenario)
      : scenario_(scenario), words_((scenario.users.size() + 63) / 64) {}

  const Entry& lookup(const std::vector<std::size_t>& covered) {
    std::vector<std::uint64_t> mask(words_, 0);
    for (std::size_t i : covered) mask[i / 64] |= std::uint64_t{1} << (i % 64);
    auto it = cache_.find(mask);
    if (it != cache_.end()) return it->second;
    Entry e;
    e.assignment = select_users(scenario_, covered);
    e.terms = objective_value(scenario_, e.assignment);
    return cache_.emplace(std::move(mask), std::move(e)).first->second;
  }

 private:
  const Scenario& scenario_;
  std::size_t words_;
  std::unordered_map<std::vector<std::uint64_t>, Entry, MaskHash> cache_;
};

}  // namespace dronecell::detail
