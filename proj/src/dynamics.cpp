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

#include "halfcavity/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <complex>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>

#include "halfcavity/errors.hpp"

namespace halfcavity {

namespace {

using complexd = std::complex<double>;
constexpr complexd kI(0.0, 1.0);

void check_density_matrix(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) throw DomainError("density matrix must be square");
  if (hermiticity_defect(rho) > 1e-8)
    throw DomainError("density matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > 1e-6)
    throw DomainError("density matrix trace must be 1");
}

}  // namespace

Eigen::MatrixXcd Liouvillian::apply(const Eigen::MatrixXcd& rho) const {
  return unvectorize(matrix * vectorize(rho), dim);
}

double Liouvillian::norm_inf() const {
  return matrix.cwiseAbs().rowwise().sum().maxCoeff();
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& m) {
  return Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
}

Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, int dim) {
  if (v.size() != static_cast<Eigen::Index>(dim) * dim)
    throw DomainError("vector length does not match dimension");
  return Eigen::Map<const Eigen::MatrixXcd>(v.data(), dim, dim);
}

Liouvillian build_liouvillian(const Eigen::MatrixXcd& hamiltonian,
                              const std::vector<JumpOperator>& jumps) {
  const int dim = static_cast<int>(hamiltonian.rows());
  if (hamiltonian.cols() != dim) throw DomainError("Hamiltonian must be square");
  if (hermiticity_defect(hamiltonian) > 1e-9 * (1.0 + hamiltonian.norm()))
    throw DomainError("Hamiltonian must be Hermitian");

  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

  // Column-stacking convention: vec(A rho B) = (B^T (x) A) vec(rho).
  Eigen::MatrixXcd liou =
      -kI * (Eigen::kroneckerProduct(id, hamiltonian) -
             Eigen::kroneckerProduct(hamiltonian.transpose(), id));

  for (const auto& jump : jumps) {
    if (jump.op.rows() != dim || jump.op.cols() != dim)
      throw DomainError("jump operator dimension mismatch");
    if (jump.rate < 0.0) throw DomainError("jump rate must be >= 0");
    const Eigen::MatrixXcd jdj = jump.op.adjoint() * jump.op;
    liou += jump.rate *
            (Eigen::kroneckerProduct(jump.op.conjugate(), jump.op) -
             0.5 * Eigen::kroneckerProduct(id, jdj) -
             0.5 * Eigen::kroneckerProduct(jdj.transpose(), id));
  }
  return {std::move(liou), dim};
}

Liouvillian build_liouvillian(const QuantumSystem& sys) {
  return build_liouvillian(sys.hamiltonian, sys.jumps);
}

Eigen::MatrixXcd steady_state(const Liouvillian& liou) {
  const int dim = liou.dim;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(liou.matrix, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double tol = sv(0) * 1e-10 + 1e-300;

  int null_dim = 0;
  int null_index = -1;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) < tol) {
      ++null_dim;
      null_index = i;
    }
  }
  if (null_dim != 1)
    throw NumericalError("non-unique steady state: null-space dimension " +
                         std::to_string(null_dim) +
                         " (dark-state manifold or uncoupled levels)");

  Eigen::MatrixXcd rho = unvectorize(svd.matrixV().col(null_index), dim);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const double trace = rho.trace().real();
  if (std::abs(trace) < 1e-6 * rho.norm())
    throw NumericalError("steady-state candidate has (near-)zero trace");
  rho /= trace;
  return rho;
}

std::vector<double> Trajectory::populations(std::span<const int> indices) const {
  std::vector<double> p;
  p.reserve(states.size());
  for (const auto& rho : states) {
    double v = 0.0;
    for (int i : indices) v += rho(i, i).real();
    p.push_back(v);
  }
  return p;
}

Trajectory evolve(const Liouvillian& liou, const Eigen::MatrixXcd& rho0,
                  const UniformGrid& grid) {
  if (rho0.rows() != liou.dim) throw DomainError("state dimension mismatch");
  check_density_matrix(rho0);

  const double lnorm = liou.norm_inf();
  const double h_bound = lnorm > 0.0 ? 1.0 / (100.0 * lnorm) : grid.dt_ns;
  const double n_sub_d = std::ceil(grid.dt_ns / h_bound - 1e-12);
  if (n_sub_d * (grid.n - 1) > 2e8)
    throw NumericalError("evolve: step-size underflow (" +
                         std::to_string(n_sub_d) + " substeps per grid step)");
  const int n_sub = std::max(1, static_cast<int>(n_sub_d));
  const double h = grid.dt_ns / n_sub;

  Trajectory traj;
  traj.grid = grid;
  traj.states.reserve(static_cast<std::size_t>(grid.n));
  traj.states.push_back(rho0);

  Eigen::VectorXcd x = vectorize(rho0);
  Eigen::VectorXcd k1(x.size()), k2(x.size()), k3(x.size()), k4(x.size());
  const auto& lm = liou.matrix;
  for (int step = 1; step < grid.n; ++step) {
    for (int sub = 0; sub < n_sub; ++sub) {
      k1.noalias() = lm * x;
      k2.noalias() = lm * (x + (0.5 * h) * k1);
      k3.noalias() = lm * (x + (0.5 * h) * k2);
      k4.noalias() = lm * (x + h * k3);
      x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    traj.states.push_back(unvectorize(x, liou.dim));
  }
  return traj;
}

Eigen::MatrixXcd collapse(const Eigen::MatrixXcd& rho,
                          std::span<const JumpOperator> jumps, Transition tag) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
  for (const auto& jump : jumps) {
    if (jump.tag != tag) continue;
    out += jump.rate * jump.op * rho * jump.op.adjoint();
  }
  const double trace = out.trace().real();
  if (!(trace > 1e-300))
    throw DomainError("no emission possible: emitting manifold is unpopulated");
  return out / trace;
}

Eigen::MatrixXcd collapse_green(const QuantumSystem& sys,
                                const Eigen::MatrixXcd& rho) {
  return collapse(rho, sys.jumps, Transition::green_493);
}

double hermiticity_defect(const Eigen::MatrixXcd& rho) {
  return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace halfcavity
