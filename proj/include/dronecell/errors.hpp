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

#include <stdexcept>
#include <string>

namespace dronecell {

// Input outside a function's mathematical domain (negative altitude, elevation > 90 deg, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The solver was asked for a configuration it does not support exactly
// (fairness with more than three tenants, non-integral resource scaling).
class UnsupportedConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The placement region contains no point.
class InfeasibleRegion : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search refused because the grid is too large.
class ResourceGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scenario or config document could not be parsed or failed validation.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dronecell
