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

// Air-to-ground propagation: sigmoid LOS probability over elevation angle and
// a mean path loss mixing free-space loss with LOS/NLOS excess losses.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "dronecell/errors.hpp"
#include "dronecell/search.hpp"

namespace dronecell {

template <typename Scalar>
struct EnvironmentT {
  std::string name;
  Scalar plos_a{};    // sigmoid offset/scale, dimensionless
  Scalar plos_b{};    // sigmoid steepness, per degree
  Scalar eta_los{};   // excess LOS loss, dB
  Scalar eta_nlos{};  // excess NLOS loss, dB

  bool operator==(const EnvironmentT&) const = default;
};

template <typename Scalar>
struct ChannelConfigT {
  Scalar carrier_frequency{2.0e9};  // Hz
  Scalar max_path_loss{100.0};      // dB, default per-user QoS threshold

  bool operator==(const ChannelConfigT&) const = default;
};

using Environment = EnvironmentT<double>;
using ChannelConfig = ChannelConfigT<double>;

inline constexpr double kSpeedOfLight = 299792458.0;

/// Editable presets for the four propagation classes. The values are
/// configuration, and every result derived from them is preset-dependent.
inline const std::array<Environment, 4>& environment_presets() {
  static const std::array<Environment, 4> presets{{
      {"suburban", 4.88, 0.43, 0.1, 21.0},
      {"urban", 9.61, 0.16, 1.0, 20.0},
      {"dense_urban", 12.08, 0.11, 1.6, 23.0},
      {"highrise_urban", 27.23, 0.08, 2.3, 34.0},
  }};
  return presets;
}

inline std::optional<Environment> find_environment_preset(std::string_view name) {
  for (const auto& env : environment_presets()) {
    if (env.name == name) return env;
  }
  return std::nullopt;
}

/// Elevation angle in degrees seen from a ground point at horizontal distance r.
template <typename Scalar>
Scalar elevation_deg(Scalar altitude_h, Scalar horizontal_r) {
  if (horizontal_r == Scalar(0)) return Scalar(90);
  const Scalar pi = std::acos(Scalar(-1));
  return std::min(Scalar(90), std::atan2(altitude_h, horizontal_r) * (Scalar(180) / pi));
}

template <typename Scalar>
Scalar los_probability(Scalar elevation, const EnvironmentT<Scalar>& env) {
  if (!(elevation > Scalar(0) && elevation <= Scalar(90))) {
    throw DomainError("los_probability: elevation must lie in (0, 90] degrees");
  }
  return Scalar(1) /
         (Scalar(1) + env.plos_a * std::exp(-env.plos_b * (elevation - env.plos_a)));
}

template <typename Scalar>
Scalar free_space_path_loss(Scalar distance, Scalar carrier_frequency) {
  const Scalar pi = std::acos(Scalar(-1));
  return Scalar(20) *
         std::log10(Scalar(4) * pi * carrier_frequency * distance / Scalar(kSpeedOfLight));
}

/// Mean air-to-ground loss in dB between a drone at altitude h and a ground
/// user at horizontal distance r.
template <typename Scalar>
Scalar path_loss(Scalar altitude_h, Scalar horizontal_r, const EnvironmentT<Scalar>& env,
                 const ChannelConfigT<Scalar>& cfg) {
  if (!(altitude_h > Scalar(0))) throw DomainError("path_loss: altitude must be positive");
  if (!(horizontal_r >= Scalar(0))) {
    throw DomainError("path_loss: horizontal distance must be non-negative");
  }
  const Scalar slant = std::hypot(altitude_h, horizontal_r);
  const Scalar p_los = los_probability(elevation_deg(altitude_h, horizontal_r), env);
  return free_space_path_loss(slant, cfg.carrier_frequency) + p_los * env.eta_los +
         (Scalar(1) - p_los) * env.eta_nlos;
}

inline constexpr double kRadiusTolerance = 0.1;       // m
inline constexpr double kRadiusLossTolerance = 0.005;  // dB
inline constexpr double kMaxRadius = 1.0e6;           // m

/// Largest horizontal distance whose loss from altitude h stays within
/// `threshold`. Zero when even the nadir point fails.
///
/// The bracket grows geometrically from 100 m; bisection then runs until the
/// bracket is narrower than `tol` and the loss at the returned radius is
/// within kRadiusLossTolerance of the threshold.
template <typename Scalar>
Scalar coverage_radius(Scalar altitude_h, Scalar threshold, const EnvironmentT<Scalar>& env,
                       const ChannelConfigT<Scalar>& cfg, Scalar tol = Scalar(kRadiusTolerance)) {
  auto loss = [&](Scalar r) { return path_loss(altitude_h, r, env, cfg); };
  if (loss(Scalar(0)) > threshold) return Scalar(0);

  Scalar lo = 0;
  Scalar hi = 100;
  while (loss(hi) <= threshold) {
    lo = hi;
    if (hi >= Scalar(kMaxRadius)) return hi;
    hi = std::min(hi * Scalar(2), Scalar(kMaxRadius));
  }
  const auto [r, r_hi] = search::bisect_boundary(
      [&](Scalar x) { return loss(x) <= threshold; }, lo, hi,
      [&](Scalar a, Scalar b) {
        return b - a <= tol && threshold - loss(a) <= Scalar(kRadiusLossTolerance);
      });
  (void)r_hi;
  return r;
}

template <typename Scalar>
struct AltitudeOptimumT {
  Scalar h_star;
  Scalar r_max;
};
using AltitudeOptimum = AltitudeOptimumT<double>;

inline constexpr int kAltitudeGridIntervals = 200;
inline constexpr double kAltitudeTolerance = 1.0;  // m
// Finer radius tolerance keeps R(h) smooth enough for the golden-section step.
inline constexpr double kOptimizerRadiusTolerance = 1.0e-6;  // m

/// Altitude in [h_min, h_max] maximising the coverage radius: coarse grid
/// scan, then golden-section refinement inside the best grid cell pair.
/// Returns (h_min, 0) when no altitude covers anything.
template <typename Scalar>
AltitudeOptimumT<Scalar> optimal_altitude(Scalar threshold, const EnvironmentT<Scalar>& env,
                                          const ChannelConfigT<Scalar>& cfg, Scalar h_min,
                                          Scalar h_max,
                                          Scalar tol = Scalar(kAltitudeTolerance)) {
  if (!(h_min > Scalar(0) && h_min < h_max)) {
    throw DomainError("optimal_altitude: require 0 < h_min < h_max");
  }
  auto radius = [&](Scalar h) {
    return coverage_radius(h, threshold, env, cfg, Scalar(kOptimizerRadiusTolerance));
  };

  const Scalar step = (h_max - h_min) / Scalar(kAltitudeGridIntervals);
  int best_k = 0;
  Scalar best_r = -1;
  for (int k = 0; k <= kAltitudeGridIntervals; ++k) {
    const Scalar h = k == kAltitudeGridIntervals ? h_max : h_min + step * Scalar(k);
    const Scalar r = radius(h);
    if (r > best_r) {
      best_r = r;
      best_k = k;
    }
  }
  if (best_r <= Scalar(0)) return {h_min, Scalar(0)};

  const Scalar grid_h =
      best_k == kAltitudeGridIntervals ? h_max : h_min + step * Scalar(best_k);
  const Scalar lo = std::max(h_min, grid_h - step);
  const Scalar hi = std::min(h_max, grid_h + step);
  const auto refined = search::golden_section_maximize(radius, lo, hi, tol);
  if (refined.value > best_r) return {refined.argmax, refined.value};
  return {grid_h, best_r};
}

}  // namespace dronecell
