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
#include <vector>

#include "halfcavity/system.hpp"

namespace halfcavity {

// Ba+ low-lying structure relevant for 493 nm / 650 nm fluorescence:
// S_1/2 (2 sublevels), P_1/2 (2), D_3/2 (4). Basis order is fixed:
// indices 0..1 = S_1/2 (mj = -1/2, +1/2), 2..3 = P_1/2 (mj = -1/2, +1/2),
// 4..7 = D_3/2 (mj = -3/2 .. +3/2).
enum class Term { S12, P12, D32 };

struct Level {
  Term term;
  double mj;  // half-integer magnetic quantum number
  int index;  // basis position 0..7
};

/// Drive field in the rotating frame. Angular frequencies in rad/ns;
/// polarization as complex spherical components (q = -1, 0, +1), unit norm.
struct LaserField {
  Transition transition;
  double detuning_rad_ns = 0.0;
  double rabi_rad_ns = 0.0;
  Eigen::Vector3cd polarization{0.0, 1.0, 0.0};
};

/// One spontaneous-decay channel |upper> -> |lower| emitting polarization q.
struct DecayChannel {
  Level upper;
  Level lower;
  int q;              // emitted spherical polarization, m_upper - m_lower
  double amplitude;   // Clebsch-Gordan factor; squares sum to 1 per upper level
  double branch_rate; // Gamma_transition * amplitude^2 (rad/ns)
};

/// Full Ba+ eight-level model. Quantization axis is z (along B).
struct AtomModel {
  std::vector<Level> levels;
  double b_field_mT = 0.0;
  std::vector<LaserField> lasers;   // exactly one green + one red
  std::vector<DecayChannel> channels;
  double gamma_green = 0.0;         // total P1/2 -> S1/2 rate (rad/ns)
  double gamma_red = 0.0;           // total P1/2 -> D3/2 rate (rad/ns)

  const LaserField& laser(Transition t) const;
};

double term_j(Term term);
double term_l(Term term);

/// Lande factor with s = 1/2: g = 1 + (j(j+1) + s(s+1) - l(l+1)) / (2j(j+1)).
double lande_g(Term term);

/// Linear Zeeman shift g * mj * mu_B * B / hbar in rad/ns.
double zeeman_shift(Term term, double mj, double b_field_mT);

/// The fixed eight-level basis, in index order.
std::vector<Level> barium_levels();

/// Clebsch-Gordan coefficient <j_lower m_lower; 1 q | j_upper m_upper> for a
/// dipole (rank-1) coupling. Zero unless m_upper = m_lower + q; throws
/// DomainError for invalid quantum numbers.
double clebsch_gordan(double j_upper, double m_upper, int q, double j_lower,
                      double m_lower);

/// Assemble the model and enumerate decay channels by the dipole selection
/// rules. Rates in rad/ns; throws ConfigError on missing lasers or
/// non-positive rates.
AtomModel build_model(double b_field_mT, const std::vector<LaserField>& lasers,
                      double gamma_green, double gamma_red);

/// Rotating-frame RWA Hamiltonian (rad/ns). Diagonal: Zeeman shifts minus the
/// cumulative laser detuning of each manifold; off-diagonal: -(Omega/2) *
/// CG * polarization component for every laser-coupled sublevel pair.
Eigen::MatrixXcd hamiltonian(const AtomModel& model);

/// One lowering matrix per decay channel (entry = amplitude at (lower, upper)),
/// carrying the full transition rate and a green/red tag.
std::vector<JumpOperator> jump_operators(const AtomModel& model);

/// Lindblad collapse operators grouped by emitted polarization q: three green
/// plus three red. Emission into one q is a single indistinguishable channel,
/// so grouping (not the per-channel list) is what enters the master equation
/// and the jump unraveling.
std::vector<JumpOperator> collapse_operators(const AtomModel& model);

/// Hamiltonian + grouped collapse operators + P manifold indices {2, 3}.
QuantumSystem make_system(const AtomModel& model);

}  // namespace halfcavity
