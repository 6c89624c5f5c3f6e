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

#include "halfcavity/atom.hpp"

#include <array>
#include <cmath>
#include <string>

#include "halfcavity/errors.hpp"
#include "halfcavity/units.hpp"

namespace halfcavity {

namespace {

constexpr int kDim = 8;

// Exact factorials up to 20 cover every sum appearing at j <= 4.
double factorial(int n) {
  static const std::array<double, 21> table = [] {
    std::array<double, 21> f{};
    f[0] = 1.0;
    for (int i = 1; i <= 20; ++i) f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i - 1)] * i;
    return f;
  }();
  if (n < 0 || n > 20) throw DomainError("factorial argument out of range");
  return table[static_cast<std::size_t>(n)];
}

int twice(double x) {
  const double t = 2.0 * x;
  const double r = std::round(t);
  if (std::abs(t - r) > 1e-9)
    throw DomainError("quantum number must be integer or half-integer");
  return static_cast<int>(r);
}

// General <j1 m1; j2 m2 | J M> via the Racah closed-form sum.
// Arguments are twice the quantum numbers so half-integers stay exact.
double cg_racah(int tj1, int tm1, int tj2, int tm2, int tJ, int tM) {
  if (tm1 + tm2 != tM) return 0.0;
  if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2) return 0.0;
  if ((tj1 + tj2 + tJ) % 2 != 0) return 0.0;
  if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tM) > tJ) return 0.0;

  auto f2 = [](int twice_n) {
    if (twice_n % 2 != 0) throw DomainError("non-integer factorial argument");
    return factorial(twice_n / 2);
  };

  const double norm =
      std::sqrt((tJ + 1.0) * f2(tj1 + tj2 - tJ) * f2(tj1 - tj2 + tJ) *
                f2(-tj1 + tj2 + tJ) / f2(tj1 + tj2 + tJ + 2)) *
      std::sqrt(f2(tJ + tM) * f2(tJ - tM) * f2(tj1 - tm1) * f2(tj1 + tm1) *
                f2(tj2 - tm2) * f2(tj2 + tm2));

  double sum = 0.0;
  for (int tk = 0; tk <= tj1 + tj2 - tJ; tk += 2) {
    const int a = tj1 + tj2 - tJ - tk;
    const int b = tj1 - tm1 - tk;
    const int c = tj2 + tm2 - tk;
    const int d = tJ - tj2 + tm1 + tk;
    const int e = tJ - tj1 - tm2 + tk;
    if (a < 0 || b < 0 || c < 0 || d < 0 || e < 0) continue;
    const double term =
        1.0 / (f2(tk) * f2(a) * f2(b) * f2(c) * f2(d) * f2(e));
    sum += (tk % 4 == 0) ? term : -term;
  }
  return norm * sum;
}

Term lower_term(Transition t) {
  return t == Transition::green_493 ? Term::S12 : Term::D32;
}

}  // namespace

double term_j(Term term) {
  switch (term) {
    case Term::S12: return 0.5;
    case Term::P12: return 0.5;
    case Term::D32: return 1.5;
  }
  throw DomainError("unknown term");
}

double term_l(Term term) {
  switch (term) {
    case Term::S12: return 0.0;
    case Term::P12: return 1.0;
    case Term::D32: return 2.0;
  }
  throw DomainError("unknown term");
}

double lande_g(Term term) {
  const double j = term_j(term);
  const double l = term_l(term);
  const double s = 0.5;
  return 1.0 + (j * (j + 1.0) + s * (s + 1.0) - l * (l + 1.0)) /
                   (2.0 * j * (j + 1.0));
}

double zeeman_shift(Term term, double mj, double b_field_mT) {
  return lande_g(term) * mj * units::zeeman_rad_per_ns_mT * b_field_mT;
}

std::vector<Level> barium_levels() {
  std::vector<Level> levels;
  levels.reserve(kDim);
  int index = 0;
  for (double mj : {-0.5, 0.5}) levels.push_back({Term::S12, mj, index++});
  for (double mj : {-0.5, 0.5}) levels.push_back({Term::P12, mj, index++});
  for (double mj : {-1.5, -0.5, 0.5, 1.5}) levels.push_back({Term::D32, mj, index++});
  return levels;
}

double clebsch_gordan(double j_upper, double m_upper, int q, double j_lower,
                      double m_lower) {
  if (q < -1 || q > 1) throw DomainError("polarization index q must be -1, 0 or +1");
  const int tju = twice(j_upper);
  const int tjl = twice(j_lower);
  const int tmu = twice(m_upper);
  const int tml = twice(m_lower);
  if (tju < 0 || tjl < 0) throw DomainError("angular momentum must be non-negative");
  if (std::abs(tmu) > tju || std::abs(tml) > tjl)
    throw DomainError("|m| exceeds j");
  if ((tju + tmu) % 2 != 0 || (tjl + tml) % 2 != 0)
    throw DomainError("m must differ from j by an integer");
  return cg_racah(tjl, tml, 2, 2 * q, tju, tmu);
}

const LaserField& AtomModel::laser(Transition t) const {
  for (const auto& l : lasers)
    if (l.transition == t) return l;
  throw ConfigError("laser not present in model");
}

AtomModel build_model(double b_field_mT, const std::vector<LaserField>& lasers,
                      double gamma_green, double gamma_red) {
  if (!(gamma_green > 0.0) || !(gamma_red > 0.0))
    throw ConfigError("decay rates must be positive");
  bool has_green = false, has_red = false;
  for (const auto& l : lasers) {
    if (l.transition == Transition::green_493) has_green = true;
    if (l.transition == Transition::red_650) has_red = true;
    if (std::abs(l.polarization.norm() - 1.0) > 1e-12)
      throw ConfigError("laser polarization must have unit norm");
    if (l.rabi_rad_ns < 0.0) throw ConfigError("Rabi frequency must be >= 0");
  }
  if (!has_green || !has_red || lasers.size() != 2)
    throw ConfigError("exactly one green and one red laser required");

  AtomModel model;
  model.levels = barium_levels();
  model.b_field_mT = b_field_mT;
  model.lasers = lasers;
  model.gamma_green = gamma_green;
  model.gamma_red = gamma_red;

  // Decay channels from each P1/2 sublevel, pruned by the selection rules
  // (the target sublevel must exist in the lower manifold).
  for (const auto& upper : model.levels) {
    if (upper.term != Term::P12) continue;
    for (Transition tr : {Transition::green_493, Transition::red_650}) {
      const Term lo = lower_term(tr);
      const double rate = tr == Transition::green_493 ? gamma_green : gamma_red;
      for (int q = -1; q <= 1; ++q) {
        const double m_low = upper.mj - q;
        if (std::abs(m_low) > term_j(lo) + 1e-9) continue;
        for (const auto& lower : model.levels) {
          if (lower.term != lo || std::abs(lower.mj - m_low) > 1e-9) continue;
          const double amp = clebsch_gordan(0.5, upper.mj, q, term_j(lo), m_low);
          model.channels.push_back({upper, lower, q, amp, rate * amp * amp});
        }
      }
    }
  }
  return model;
}

Eigen::MatrixXcd hamiltonian(const AtomModel& model) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(kDim, kDim);
  const double det_green = model.laser(Transition::green_493).detuning_rad_ns;
  const double det_red = model.laser(Transition::red_650).detuning_rad_ns;

  for (const auto& lv : model.levels) {
    double diag = zeeman_shift(lv.term, lv.mj, model.b_field_mT);
    // Two-frequency rotating frame: S at zero, P shifted by -Delta_green,
    // D by -(Delta_green - Delta_red).
    if (lv.term == Term::P12) diag -= det_green;
    if (lv.term == Term::D32) diag -= det_green - det_red;
    h(lv.index, lv.index) = diag;
  }

  for (const auto& laser : model.lasers) {
    const Term lo = lower_term(laser.transition);
    for (const auto& upper : model.levels) {
      if (upper.term != Term::P12) continue;
      for (const auto& lower : model.levels) {
        if (lower.term != lo) continue;
        const double dq = upper.mj - lower.mj;
        if (std::abs(dq) > 1.0 + 1e-9) continue;
        const int q = static_cast<int>(std::round(dq));
        const std::complex<double> pol = laser.polarization(q + 1);
        if (pol == 0.0) continue;
        const double cg = clebsch_gordan(0.5, upper.mj, q, term_j(lo), lower.mj);
        const std::complex<double> coupling = -0.5 * laser.rabi_rad_ns * pol * cg;
        h(upper.index, lower.index) += coupling;
        h(lower.index, upper.index) += std::conj(coupling);
      }
    }
  }
  return h;
}

std::vector<JumpOperator> jump_operators(const AtomModel& model) {
  std::vector<JumpOperator> ops;
  ops.reserve(model.channels.size());
  for (const auto& ch : model.channels) {
    JumpOperator j;
    j.op = Eigen::MatrixXcd::Zero(kDim, kDim);
    j.op(ch.lower.index, ch.upper.index) = ch.amplitude;
    const bool green = ch.lower.term == Term::S12;
    j.rate = green ? model.gamma_green : model.gamma_red;
    j.tag = green ? Transition::green_493 : Transition::red_650;
    ops.push_back(std::move(j));
  }
  return ops;
}

std::vector<JumpOperator> collapse_operators(const AtomModel& model) {
  std::vector<JumpOperator> ops;
  for (Transition tr : {Transition::green_493, Transition::red_650}) {
    for (int q = -1; q <= 1; ++q) {
      JumpOperator j;
      j.op = Eigen::MatrixXcd::Zero(kDim, kDim);
      j.rate = tr == Transition::green_493 ? model.gamma_green : model.gamma_red;
      j.tag = tr;
      bool any = false;
      for (const auto& ch : model.channels) {
        const bool green = ch.lower.term == Term::S12;
        if ((green ? Transition::green_493 : Transition::red_650) != tr) continue;
        if (ch.q != q) continue;
        j.op(ch.lower.index, ch.upper.index) = ch.amplitude;
        any = true;
      }
      if (any) ops.push_back(std::move(j));
    }
  }
  return ops;
}

QuantumSystem make_system(const AtomModel& model) {
  QuantumSystem sys;
  sys.hamiltonian = hamiltonian(model);
  sys.jumps = collapse_operators(model);
  sys.excited_levels = {2, 3};
  return sys;
}

}  // namespace halfcavity
