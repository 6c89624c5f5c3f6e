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

#include "halfcavity/correlation.hpp"

#include <algorithm>
#include <cmath>

#include "halfcavity/dynamics.hpp"
#include "halfcavity/errors.hpp"

namespace halfcavity {

namespace {

using complexd = std::complex<double>;

void check_coverage(const AmplitudeCurve& b, const UniformGrid& grid, double tau) {
  if (grid.t0_ns < -1e-12) throw DomainError("correlation lags must satisfy T >= 0");
  const double needed = grid.t_end() + tau;
  if (b.grid.t_end() < needed - 1e-9)
    throw DomainError("amplitude grid too short: covers up to " +
                      std::to_string(b.grid.t_end()) + " ns, need " +
                      std::to_string(needed) + " ns (no extrapolation)");
}

// Shared regression pipeline: steady state -> green collapse -> evolution.
struct Regression {
  Eigen::MatrixXcd rho_ss;
  double rate_ss;
  Trajectory traj;
};

Regression run_regression(const QuantumSystem& sys, const UniformGrid& grid) {
  const Liouvillian liou = build_liouvillian(sys);
  Eigen::MatrixXcd rho_ss = steady_state(liou);
  const double rate = emission_rate(sys, rho_ss, Transition::green_493);
  const Eigen::MatrixXcd rho_c = collapse_green(sys, rho_ss);
  Trajectory traj = evolve(liou, rho_c, grid);
  return {std::move(rho_ss), rate, std::move(traj)};
}

}  // namespace

void MirrorConfig::validate() const {
  if (!(tau_ns >= 0.0)) throw DomainError("mirror: tau must be >= 0");
  if (!(contrast >= 0.0 && contrast <= 1.0))
    throw DomainError("mirror: contrast must lie in [0, 1]");
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw DomainError("mirror: epsilon must lie in [0, 1]");
}

std::string to_string(Normalization n) {
  switch (n) {
    case Normalization::raw: return "raw";
    case Normalization::unit_asymptote: return "unit-asymptote";
    case Normalization::unit_peak: return "unit-peak";
  }
  return "raw";
}

std::string to_string(AmplitudeMode m) {
  return m == AmplitudeMode::population_sqrt ? "population_sqrt"
                                             : "two_level_amplitude";
}

complexd AmplitudeCurve::at(double t_ns) const {
  const double rel = (t_ns - grid.t0_ns) / grid.dt_ns;
  if (rel < -1e-9 || rel > grid.n - 1 + 1e-9)
    throw DomainError("amplitude lookup outside grid (no extrapolation)");
  const int i = std::clamp(static_cast<int>(rel), 0, grid.n - 2);
  const double frac = rel - i;
  const auto& s = samples;
  // Exact sample at (numerically) coincident nodes keeps identities like the
  // tau = 0 Markovian limits exact.
  if (std::abs(frac) < 1e-9) return s[static_cast<std::size_t>(i)];
  if (std::abs(frac - 1.0) < 1e-9) return s[static_cast<std::size_t>(i + 1)];
  return (1.0 - frac) * s[static_cast<std::size_t>(i)] +
         frac * s[static_cast<std::size_t>(i + 1)];
}

CorrelationCurve g2_free_space(const QuantumSystem& sys, const UniformGrid& grid) {
  const Regression reg = run_regression(sys, grid);
  CorrelationCurve curve;
  curve.grid = grid;
  curve.normalization = Normalization::raw;
  curve.samples.reserve(reg.traj.states.size());
  for (const auto& rho : reg.traj.states)
    curve.samples.push_back(reg.rate_ss *
                            emission_rate(sys, rho, Transition::green_493));
  return curve;
}

AmplitudeCurve amplitude_bP(const QuantumSystem& sys, const UniformGrid& grid,
                            AmplitudeMode mode) {
  if (mode != AmplitudeMode::population_sqrt)
    throw DomainError(
        "two_level_amplitude needs laser drive parameters; use the AtomModel "
        "overload or amplitude_two_level()");
  const Regression reg = run_regression(sys, grid);
  AmplitudeCurve b;
  b.grid = grid;
  b.mode = mode;
  b.samples.reserve(reg.traj.states.size());
  for (const auto& rho : reg.traj.states)
    b.samples.push_back(std::sqrt(std::max(0.0, excited_population(sys, rho))));
  return b;
}

AmplitudeCurve amplitude_bP(const AtomModel& model, const UniformGrid& grid,
                            AmplitudeMode mode) {
  if (mode == AmplitudeMode::population_sqrt)
    return amplitude_bP(make_system(model), grid, mode);
  const LaserField& green = model.laser(Transition::green_493);
  return amplitude_two_level(
      {green.rabi_rad_ns, green.detuning_rad_ns, model.gamma_green + model.gamma_red},
      grid);
}

AmplitudeCurve amplitude_two_level(const TwoLevelDrive& drive, const UniformGrid& grid) {
  // Amplitude equations i c' = H_eff c with H_eff = [[0, -Omega/2],
  // [-Omega/2, -Delta - i Gamma/2]], solved exactly through the 2x2
  // eigensystem of A = -i H_eff: b(t) = a (e^{l+ t} - e^{l- t}) / (l+ - l-).
  const complexd a(0.0, 0.5 * drive.rabi_rad_ns);
  const complexd d(-0.5 * drive.gamma_rad_ns, drive.detuning_rad_ns);
  const complexd disc = std::sqrt(d * d + 4.0 * a * a);
  const complexd lp = 0.5 * (d + disc);
  const complexd lm = 0.5 * (d - disc);

  AmplitudeCurve b;
  b.grid = grid;
  b.mode = AmplitudeMode::two_level_amplitude;
  b.samples.reserve(static_cast<std::size_t>(grid.n));
  for (int k = 0; k < grid.n; ++k) {
    const double t = grid.time(k) - grid.t0_ns;
    if (std::abs(lp - lm) < 1e-14)
      b.samples.push_back(a * t * std::exp(lp * t));
    else
      b.samples.push_back(a * (std::exp(lp * t) - std::exp(lm * t)) / (lp - lm));
  }
  return b;
}

CorrelationCurve g2_mirror(const AmplitudeCurve& b, const MirrorConfig& mirror,
                           const UniformGrid& grid) {
  mirror.validate();
  check_coverage(b, grid, mirror.tau_ns);
  const double cphi = std::cos(mirror.phase);

  CorrelationCurve curve;
  curve.grid = grid;
  curve.normalization = Normalization::raw;
  curve.samples.reserve(static_cast<std::size_t>(grid.n));
  for (int k = 0; k < grid.n; ++k) {
    const double T = grid.time(k);
    const complexd v = 2.0 * cphi * b.at(T) - b.at(std::abs(T - mirror.tau_ns)) -
                       b.at(T + mirror.tau_ns);
    curve.samples.push_back(std::norm(v));
  }
  return curve;
}

CorrelationCurve g2_noninterfering(const AmplitudeCurve& b, double tau_ns,
                                   const UniformGrid& grid) {
  if (!(tau_ns >= 0.0)) throw DomainError("tau must be >= 0");
  check_coverage(b, grid, tau_ns);

  CorrelationCurve curve;
  curve.grid = grid;
  curve.normalization = Normalization::raw;
  curve.samples.reserve(static_cast<std::size_t>(grid.n));
  for (int k = 0; k < grid.n; ++k) {
    const double T = grid.time(k);
    curve.samples.push_back(2.0 * std::norm(b.at(T)) +
                            std::norm(b.at(std::abs(T - tau_ns))) +
                            std::norm(b.at(T + tau_ns)));
  }
  return curve;
}

CorrelationCurve mix_measured(const CorrelationCurve& gm,
                              const CorrelationCurve& gni, double contrast) {
  if (!(contrast >= 0.0 && contrast <= 1.0))
    throw DomainError("contrast must lie in [0, 1]");
  const bool same_grid = gm.grid.n == gni.grid.n &&
                         std::abs(gm.grid.t0_ns - gni.grid.t0_ns) < 1e-12 &&
                         std::abs(gm.grid.dt_ns - gni.grid.dt_ns) < 1e-12;
  if (!same_grid) throw DomainError("mix_measured: grids must match");
  if (gm.normalization != gni.normalization)
    throw DomainError("mix_measured: normalization tags must match");

  CorrelationCurve out;
  out.grid = gm.grid;
  out.normalization = gm.normalization;
  out.samples.resize(gm.samples.size());
  for (std::size_t i = 0; i < gm.samples.size(); ++i)
    out.samples[i] = contrast * gm.samples[i] + (1.0 - contrast) * gni.samples[i];
  return out;
}

std::vector<double> fringe(const std::vector<double>& phases, double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0))
    throw DomainError("visibility must lie in [0, 1]");
  std::vector<double> out;
  out.reserve(phases.size());
  for (double phi : phases) out.push_back(0.5 * (1.0 - visibility * std::cos(phi)));
  return out;
}

CorrelationCurve normalize(const CorrelationCurve& curve, Normalization mode) {
  CorrelationCurve out = curve;
  if (mode == Normalization::raw) {
    out.normalization = Normalization::raw;
    return out;
  }

  double divisor = 0.0;
  if (mode == Normalization::unit_asymptote) {
    const std::size_t n = curve.samples.size();
    const std::size_t tail = std::max<std::size_t>(1, n / 10);
    for (std::size_t i = n - tail; i < n; ++i) divisor += curve.samples[i];
    divisor /= static_cast<double>(tail);
  } else {
    divisor = *std::max_element(curve.samples.begin(), curve.samples.end());
  }

  const double scale = *std::max_element(curve.samples.begin(), curve.samples.end());
  if (!(divisor > 0.0) || divisor < 1e-12 * scale)
    throw NumericalError(
        "normalize: divisor vanishes (node-like curve); use raw or unit-peak");

  for (double& s : out.samples) s /= divisor;
  out.normalization = mode;
  return out;
}

}  // namespace halfcavity
