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

#include <cmath>
#include <utility>

namespace dronecell::search {

/// Shrinks a bracket [lo, hi] around the boundary of a monotone predicate.
///
/// `feasible(lo)` must hold and `feasible(hi)` must not. The loop halves the
/// bracket until `stop(lo, hi)` returns true or `max_iterations` is reached.
/// Returns the final bracket; `first` is always on the feasible side.
template <typename Scalar, typename Feasible, typename Stop>
std::pair<Scalar, Scalar> bisect_boundary(Feasible&& feasible, Scalar lo, Scalar hi, Stop&& stop,
                                          int max_iterations = 200) {
  for (int it = 0; it < max_iterations && !stop(lo, hi); ++it) {
    const Scalar mid = lo + (hi - lo) / Scalar(2);
    if (mid <= lo || mid >= hi) break;
    if (feasible(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

template <typename Scalar>
struct GoldenResult {
  Scalar argmax;
  Scalar value;
};

/// Golden-section search for the maximum of a unimodal function on [a, b].
/// Stops once the bracket is narrower than `tol`. The returned point is the
/// best one actually evaluated, so `value == f(argmax)` exactly.
template <typename Scalar, typename F>
GoldenResult<Scalar> golden_section_maximize(F&& f, Scalar a, Scalar b, Scalar tol) {
  const Scalar inv_phi = (std::sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
  Scalar c = b - inv_phi * (b - a);
  Scalar d = a + inv_phi * (b - a);
  Scalar fc = f(c);
  Scalar fd = f(d);
  GoldenResult<Scalar> best = fc >= fd ? GoldenResult<Scalar>{c, fc} : GoldenResult<Scalar>{d, fd};

  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc > best.value) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd > best.value) best = {d, fd};
    }
  }
  return best;
}

}  // namespace dronecell::search
