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
#include <span>
#include <vector>

#include "halfcavity/grid.hpp"
#include "halfcavity/system.hpp"

namespace halfcavity {

/// Lindblad generator as a dense dim^2 x dim^2 matrix acting on
/// column-stacked density matrices.
struct Liouvillian {
  Eigen::MatrixXcd matrix;
  int dim = 0;

  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& rho) const;
  double norm_inf() const;
};

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, int dim);

/// L[rho] = -i[H, rho] + sum_k gamma_k (J rho J^dag - 1/2 {J^dag J, rho}).
Liouvillian build_liouvillian(const Eigen::MatrixXcd& hamiltonian,
                              const std::vector<JumpOperator>& jumps);
Liouvillian build_liouvillian(const QuantumSystem& sys);

/// Unique stationary state via null-space extraction (SVD of L with the
/// trace constraint applied afterwards). Throws NumericalError when the
/// null space is degenerate (dark-state manifold), reporting its dimension.
Eigen::MatrixXcd steady_state(const Liouvillian& liou);

/// Density-matrix samples along a uniform time grid.
struct Trajectory {
  UniformGrid grid;
  std::vector<Eigen::MatrixXcd> states;

  std::vector<double> populations(std::span<const int> indices) const;
};

/// Fixed-step RK4 propagation of rho' = L[rho]; the internal substep obeys
/// h <= min(1/(100 |L|), grid step). Throws NumericalError when the rule
/// underflows into an unreasonable step count.
Trajectory evolve(const Liouvillian& liou, const Eigen::MatrixXcd& rho0,
                  const UniformGrid& grid);

/// Conditional state after a detected photon: sum_k gamma_k J_k rho J_k^dag
/// over the channels with the given tag, trace-normalized. Throws DomainError
/// when no emission is possible (zero weight in the emitting manifold).
Eigen::MatrixXcd collapse(const Eigen::MatrixXcd& rho,
                          std::span<const JumpOperator> jumps, Transition tag);

/// Collapse onto the state conditioned on a green (493 nm) detection; the
/// detector does not resolve polarization, so all green q channels are summed.
Eigen::MatrixXcd collapse_green(const QuantumSystem& sys,
                                const Eigen::MatrixXcd& rho);

// Density-matrix diagnostics used by tests and the acceptance suite.
double hermiticity_defect(const Eigen::MatrixXcd& rho);
double min_eigenvalue(const Eigen::MatrixXcd& rho);

}  // namespace halfcavity
