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

#include <complex>
#include <string>
#include <vector>

#include "halfcavity/atom.hpp"
#include "halfcavity/grid.hpp"
#include "halfcavity/system.hpp"

namespace halfcavity {

/// Mirror geometry. tau (coarse, cm-scale distance) and the interference
/// phase phi = 2 k L (nanometer-scale position) are independent knobs, as in
/// the experiment where the fringe lock pins phi while L fixes the delay.
struct MirrorConfig {
  double tau_ns = 0.0;
  double phase = 0.0;      // radians, phi = 2 k_fl L
  double epsilon = 0.015;  // reflected fraction; metadata only
  double contrast = 0.5;   // fringe contrast c in [0, 1]

  void validate() const;
};

enum class Normalization { raw, unit_asymptote, unit_peak };
enum class AmplitudeMode { population_sqrt, two_level_amplitude };

std::string to_string(Normalization n);
std::string to_string(AmplitudeMode m);

/// Excited-state occupation amplitude b(T) after a detection at T = 0.
struct AmplitudeCurve {
  UniformGrid grid;
  std::vector<std::complex<double>> samples;
  AmplitudeMode mode = AmplitudeMode::population_sqrt;

  /// Linear interpolation; exact at grid nodes. Throws DomainError outside
  /// the grid (no extrapolation).
  std::complex<double> at(double t_ns) const;
};

/// Nonnegative correlation samples on a uniform lag grid.
struct CorrelationCurve {
  UniformGrid grid;
  std::vector<double> samples;
  Normalization normalization = Normalization::raw;
};

/// Free-space G2 via the quantum regression theorem: the emission rate of the
/// post-detection state, scaled by the steady-state emission rate. Raw units.
CorrelationCurve g2_free_space(const QuantumSystem& sys, const UniformGrid& grid);

/// b(T) in population_sqrt mode: sqrt of the excited population starting from
/// the green-collapsed steady state (real, b(0) = 0).
AmplitudeCurve amplitude_bP(const QuantumSystem& sys, const UniformGrid& grid,
                            AmplitudeMode mode = AmplitudeMode::population_sqrt);

/// Model-level dispatch: population_sqrt uses the full system; the
/// two_level_amplitude comparison mode takes the green laser drive and the
/// total P decay rate.
AmplitudeCurve amplitude_bP(const AtomModel& model, const UniformGrid& grid,
                            AmplitudeMode mode);

/// Complex no-jump amplitude of a driven two-level atom with decay folded in
/// as -i Gamma/2 on the excited state.
struct TwoLevelDrive {
  double rabi_rad_ns = 0.0;
  double detuning_rad_ns = 0.0;
  double gamma_rad_ns = 0.0;
};
AmplitudeCurve amplitude_two_level(const TwoLevelDrive& drive, const UniformGrid& grid);

/// Mirror-mode correlation |2 b(T) cos(phi) - b(|T - tau|) - b(T + tau)|^2.
/// The overall proportionality constant is 1 in raw units, identical for all
/// phases, so curves at different phi are mutually comparable.
/// Requires b to cover [0, T_max + tau]; no extrapolation.
CorrelationCurve g2_mirror(const AmplitudeCurve& b, const MirrorConfig& mirror,
                           const UniformGrid& grid);

/// Non-interfering three-source sum 2|b(T)|^2 + |b(|T-tau|)|^2 + |b(T+tau)|^2,
/// same raw proportionality constant as g2_mirror.
CorrelationCurve g2_noninterfering(const AmplitudeCurve& b, double tau_ns,
                                   const UniformGrid& grid);

/// Measured mixture c * g_m + (1 - c) * g_ni for fringe contrast c.
CorrelationCurve mix_measured(const CorrelationCurve& gm,
                              const CorrelationCurve& gni, double contrast);

/// First-order fringe signal (1 - v cos(phi)) / 2 per scan point; equals
/// sin^2(phi/2) at unit visibility.
std::vector<double> fringe(const std::vector<double>& phases, double visibility = 1.0);

/// unit_asymptote divides by the mean of the last 10% of samples; unit_peak
/// by the maximum. Throws NumericalError on a vanishing divisor (e.g. a node
/// curve), suggesting raw or unit-peak instead.
CorrelationCurve normalize(const CorrelationCurve& curve, Normalization mode);

}  // namespace halfcavity
