// Copyright 2026 The halfcavity Authors
//
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

// Internal unit convention: time in nanoseconds, angular frequency in rad/ns.
// At these scales the Liouvillian has norm O(1), which keeps the absolute
// tolerances used throughout (1e-10 residuals, 1e-9 trace drift) meaningful
// in double precision. The user-facing interface speaks MHz, mT, ns and cm.

namespace halfcavity::units {

inline constexpr double pi = 3.14159265358979323846;

// CODATA: mu_B = 9.2740100783e-24 J/T, hbar = 1.054571817e-34 J s.
// mu_B / hbar expressed in rad/ns per mT.
inline constexpr double zeeman_rad_per_ns_mT = 8.7941000544e-2;

// Speed of light in cm/ns.
inline constexpr double c_cm_per_ns = 29.9792458;

/// Linear frequency in MHz -> angular frequency in rad/ns.
inline constexpr double rad_per_ns(double megahertz) {
  return 2.0 * pi * megahertz * 1e-3;
}

/// Round-trip retardation 2L/c for an ion-mirror distance in cm.
inline constexpr double retardation_ns(double distance_cm) {
  return 2.0 * distance_cm / c_cm_per_ns;
}

}  // namespace halfcavity::units
