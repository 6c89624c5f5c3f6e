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

// Test-only oracles, kept independent of the library implementation paths
// they check: closed-form coefficient tables, textbook two-level solutions,
// directly coded Bloch ODEs and a brute-force pair counter.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace oracles {

// <j1 m1; 1 q | J M> from the standard closed-form table (Condon-Shortley
// phases), M = m1 + q. Valid for J in {j1 - 1, j1, j1 + 1}.
inline double cg_rank1_table(double j1, double m1, int q, double J) {
  const double M = m1 + q;
  if (std::abs(M) > J + 1e-9) return 0.0;
  if (std::abs(J - (j1 + 1.0)) < 1e-9) {
    if (q == 1) return std::sqrt((j1 + M) * (j1 + M + 1.0) / ((2 * j1 + 1) * (2 * j1 + 2)));
    if (q == 0) return std::sqrt((j1 - M + 1.0) * (j1 + M + 1.0) / ((2 * j1 + 1) * (j1 + 1)));
    return std::sqrt((j1 - M) * (j1 - M + 1.0) / ((2 * j1 + 1) * (2 * j1 + 2)));
  }
  if (std::abs(J - j1) < 1e-9) {
    if (q == 1) return -std::sqrt((j1 + M) * (j1 - M + 1.0) / (2 * j1 * (j1 + 1)));
    if (q == 0) return M / std::sqrt(j1 * (j1 + 1));
    return std::sqrt((j1 - M) * (j1 + M + 1.0) / (2 * j1 * (j1 + 1)));
  }
  if (std::abs(J - (j1 - 1.0)) < 1e-9) {
    if (q == 1) return std::sqrt((j1 - M) * (j1 - M + 1.0) / (2 * j1 * (2 * j1 + 1)));
    if (q == 0) return -std::sqrt((j1 - M) * (j1 + M) / (j1 * (2 * j1 + 1)));
    return std::sqrt((j1 + M + 1.0) * (j1 + M) / (2 * j1 * (2 * j1 + 1)));
  }
  return 0.0;
}

// Textbook steady-state excited population of a driven damped two-level atom.
inline double two_level_ss_population(double rabi, double detuning, double gamma) {
  return (rabi * rabi / 4.0) /
         (detuning * detuning + gamma * gamma / 4.0 + rabi * rabi / 2.0);
}

// Resonant damped Rabi transient from the ground state (underdamped branch).
inline double damped_rabi_population(double t, double rabi, double gamma) {
  const double wss = rabi * rabi / (2.0 * rabi * rabi + gamma * gamma);
  const double wr = std::sqrt(rabi * rabi - gamma * gamma / 16.0);
  return wss * (1.0 - std::exp(-0.75 * gamma * t) *
                          (std::cos(wr * t) + 0.75 * gamma / wr * std::sin(wr * t)));
}

// Directly coded two-level Bloch equations (element-wise, no superoperator),
// integrated with RK4. State: (rho_ee, Re rho_eg, Im rho_eg).
// Convention: H = -Delta |e><e| - (Omega/2)(|e><g| + |g><e|), decay gamma.
struct TwoLevelBloch {
  double rabi, detuning, gamma;

  Eigen::Vector3d rhs(const Eigen::Vector3d& s) const {
    const double w = s(0), u = s(1), v = s(2);
    // drho_ee = -gamma w - Omega v ; follows from the Hamiltonian above
    return {-gamma * w - rabi * v,
            -0.5 * gamma * u - detuning * v,
            detuning * u + rabi * w - 0.5 * rabi - 0.5 * gamma * v};
  }

  // excited population at the grid times, from the ground state
  std::vector<double> populations(double dt, int n, int substeps = 200) const {
    std::vector<double> out;
    Eigen::Vector3d s(0.0, 0.0, 0.0);
    out.push_back(s(0));
    const double h = dt / substeps;
    for (int k = 1; k < n; ++k) {
      for (int i = 0; i < substeps; ++i) {
        const Eigen::Vector3d k1 = rhs(s);
        const Eigen::Vector3d k2 = rhs(s + 0.5 * h * k1);
        const Eigen::Vector3d k3 = rhs(s + 0.5 * h * k2);
        const Eigen::Vector3d k4 = rhs(s + h * k3);
        s += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      out.push_back(s(0));
    }
    return out;
  }
};

// Brute-force two-component no-jump amplitude ODE for the two-level
// comparison mode: i c' = H_eff c, H_eff = [[0, -Omega/2],
// [-Omega/2, -Delta - i Gamma/2]].
inline std::vector<std::complex<double>> amplitude_ode(double rabi, double detuning,
                                                       double gamma, double dt,
                                                       int n, int substeps = 400) {
  using C = std::complex<double>;
  Eigen::Vector2cd c(1.0, 0.0);
  Eigen::Matrix2cd heff;
  heff << C(0, 0), C(-0.5 * rabi, 0), C(-0.5 * rabi, 0), C(-detuning, -0.5 * gamma);
  const Eigen::Matrix2cd a = C(0, -1) * heff;
  std::vector<C> out{c(1)};
  const double h = dt / substeps;
  for (int k = 1; k < n; ++k) {
    for (int i = 0; i < substeps; ++i) {
      const Eigen::Vector2cd k1 = a * c;
      const Eigen::Vector2cd k2 = a * (c + 0.5 * h * k1);
      const Eigen::Vector2cd k3 = a * (c + 0.5 * h * k2);
      const Eigen::Vector2cd k4 = a * (c + h * k3);
      c += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    out.push_back(c(1));
  }
  return out;
}

// Directly coded N-level Lindblad right-hand side (element loops, no
// superoperator), for brute-force equivalence checks.
inline Eigen::MatrixXcd lindblad_rhs_direct(
    const Eigen::MatrixXcd& h, const Eigen::MatrixXcd& rho,
    const std::vector<std::pair<Eigen::MatrixXcd, double>>& jumps) {
  const std::complex<double> im(0.0, 1.0);
  Eigen::MatrixXcd out = -im * (h * rho - rho * h);
  for (const auto& [j, rate] : jumps) {
    const Eigen::MatrixXcd jdj = j.adjoint() * j;
    out += rate * (j * rho * j.adjoint() - 0.5 * (jdj * rho + rho * jdj));
  }
  return out;
}

// All-pairs O(n^2) lag counter; reference for the sliding-window correlator.
inline std::vector<std::uint64_t> brute_force_pairs(const std::vector<double>& t,
                                                    double bin, std::size_t n_bins) {
  std::vector<std::uint64_t> counts(n_bins, 0);
  const double max_lag = bin * static_cast<double>(n_bins);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const double lag = t[j] - t[i];
      if (lag <= 0.0 || lag > max_lag) continue;
      const auto k = static_cast<std::size_t>(std::ceil(lag / bin)) - 1;
      if (k < n_bins) ++counts[k];
    }
  }
  return counts;
}

// Poisson click stream from an independent generator (std::mt19937_64).
inline std::vector<double> poisson_stream(double rate, double duration,
                                          std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::exponential_distribution<double> exp(rate);
  std::vector<double> t;
  for (double s = exp(gen); s <= duration; s += exp(gen)) t.push_back(s);
  return t;
}

}  // namespace oracles
