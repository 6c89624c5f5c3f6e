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

#include <cstdint>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>

#include "halfcavity/atom.hpp"
#include "halfcavity/correlation.hpp"
#include "halfcavity/grid.hpp"

namespace halfcavity {

/// One laser entry as written in the config (interface units: MHz).
/// The polarization keeps its original JSON form so emitted headers
/// round-trip byte-identically.
struct LaserConfig {
  double rabi_MHz = 0.0;
  double detuning_MHz = 0.0;
  nlohmann::json polarization = "pi";
};

/// Full run configuration in interface units (MHz, mT, ns, cm).
struct RunConfig {
  // atom
  double b_field_mT = 0.0;
  double gamma_green_MHz = 0.0;
  double gamma_red_MHz = 0.0;
  LaserConfig green;
  LaserConfig red;
  // mirror: exactly one of L_cm / tau_ns
  std::optional<double> L_cm;
  std::optional<double> tau_ns;
  double phase_over_pi = 0.0;
  double contrast = 0.5;
  double epsilon = 0.015;
  // grid
  double t_max_ns = 40.0;
  double dt_ns = 0.05;
  // oracle
  double oracle_duration_s = 0.0;
  std::uint64_t seed = 1;
  double dark_rate_hz = 0.0;
  double p_reflect = 0.0;
  // amplitude mode for b(T)
  AmplitudeMode amplitude_mode = AmplitudeMode::population_sqrt;
  // outputs
  std::string out_dir = "out";

  double resolved_tau_ns() const;
  AtomModel make_model() const;
  MirrorConfig make_mirror() const;
  UniformGrid make_grid() const;

  /// Documented defaults shipped with the repository. The drive parameters
  /// are not authoritative measurements; see README.
  static RunConfig defaults();

  /// Strict parse: unknown keys, missing lasers and out-of-range values are
  /// ConfigErrors with the offending path in the message.
  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig from_file(const std::filesystem::path& path);
  nlohmann::json to_json() const;
};

/// Accepts "pi", "sigma+", "sigma-", "linear:<angle deg from z>", or a
/// 3-array of spherical components (numbers or [re, im] pairs, q = -1, 0, +1).
Eigen::Vector3cd parse_polarization(const nlohmann::json& j);

}  // namespace halfcavity
