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

#include <cstddef>
#include <span>

#include "dronecell/scenario.hpp"

namespace dronecell {

/// Exact best subset of `eligible` (indices into scenario.users) under the
/// capacity constraint.
///
/// Dynamic programme over (per-tenant served counts, scaled resource used).
/// The count dimension is dropped when w2 == 0 and the resource dimension
/// when the eligible users fit within capacity. Ties go to more served users,
/// then to the lexicographically smallest set of served ids.
///
/// Throws UnsupportedConfiguration for J > 3 with w2 > 0, for resource
/// demands that are not integral after scaling by 10^k (k <= 6), or when the
/// state table would exceed the size guard.
Assignment select_users(const Scenario& scenario, std::span<const std::size_t> eligible);

}  // namespace dronecell
