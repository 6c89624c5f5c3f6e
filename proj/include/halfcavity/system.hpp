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

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <vector>

namespace halfcavity {

enum class Transition { green_493, red_650 };

/// Collapse channel: dimensionless lowering matrix plus its rate (rad/ns).
struct JumpOperator {
  Eigen::MatrixXcd op;
  double rate = 0.0;
  Transition tag = Transition::green_493;
};

/// Hamiltonian + collapse channels + the index set of the emitting manifold.
/// Dimension-agnostic so reduced (2- or 3-level) systems share all machinery.
struct QuantumSystem {
  Eigen::MatrixXcd hamiltonian;
  std::vector<JumpOperator> jumps;
  std::vector<int> excited_levels;

  int dim() const { return static_cast<int>(hamiltonian.rows()); }
};

/// Population summed over the excited-manifold indices.
inline double excited_population(const QuantumSystem& sys, const Eigen::MatrixXcd& rho) {
  double p = 0.0;
  for (int i : sys.excited_levels) p += rho(i, i).real();
  return p;
}

/// Photon emission rate sum_k gamma_k Tr(J_k^dag J_k rho), optionally
/// restricted to one transition (rad/ns, i.e. photons per ns).
inline double emission_rate(const QuantumSystem& sys, const Eigen::MatrixXcd& rho,
                            std::optional<Transition> filter = std::nullopt) {
  double rate = 0.0;
  for (const auto& j : sys.jumps) {
    if (filter && j.tag != *filter) continue;
    rate += j.rate * (j.op.adjoint() * j.op * rho).trace().real();
  }
  return rate;
}

}  // namespace halfcavity
