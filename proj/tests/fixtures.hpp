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

#include <cmath>

#include "halfcavity/atom.hpp"
#include "halfcavity/system.hpp"

namespace fixtures {

inline Eigen::Vector3cd linear_pol(double deg) {
  const double th = deg * M_PI / 180.0;
  return {std::sin(th) / std::sqrt(2.0), std::cos(th),
          -std::sin(th) / std::sqrt(2.0)};
}

// Same drive parameters as the shipped default config.
inline halfcavity::AtomModel default_like_model() {
  using namespace halfcavity;
  LaserField g, r;
  g.transition = Transition::green_493;
  g.rabi_rad_ns = 2.0 * M_PI * 20e-3;
  g.detuning_rad_ns = -2.0 * M_PI * 4e-3;
  g.polarization = linear_pol(55.0);
  r.transition = Transition::red_650;
  r.rabi_rad_ns = 2.0 * M_PI * 25e-3;
  r.detuning_rad_ns = -2.0 * M_PI * 1e-3;
  r.polarization = linear_pol(65.0);
  return build_model(0.4, {g, r}, 2.0 * M_PI * 15.1e-3, 2.0 * M_PI * 5.3e-3);
}

// Driven damped two-level system; index 0 = ground, 1 = excited.
inline halfcavity::QuantumSystem two_level(double rabi, double detuning,
                                           double gamma) {
  using namespace halfcavity;
  QuantumSystem sys;
  sys.hamiltonian = Eigen::MatrixXcd::Zero(2, 2);
  sys.hamiltonian(0, 1) = -0.5 * rabi;
  sys.hamiltonian(1, 0) = -0.5 * rabi;
  sys.hamiltonian(1, 1) = -detuning;
  JumpOperator j;
  j.op = Eigen::MatrixXcd::Zero(2, 2);
  j.op(0, 1) = 1.0;
  j.rate = gamma;
  j.tag = Transition::green_493;
  sys.jumps = {j};
  sys.excited_levels = {1};
  return sys;
}

}  // namespace fixtures
