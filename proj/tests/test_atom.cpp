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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "halfcavity/atom.hpp"
#include "halfcavity/errors.hpp"
#include "halfcavity/units.hpp"
#include "oracles.hpp"

using namespace halfcavity;

namespace {

LaserField make_laser(Transition tr, double rabi, double detuning,
                      const Eigen::Vector3cd& pol) {
  LaserField l;
  l.transition = tr;
  l.rabi_rad_ns = rabi;
  l.detuning_rad_ns = detuning;
  l.polarization = pol;
  return l;
}

AtomModel default_like_model(double b_mT = 0.4) {
  const double s2 = 1.0 / std::sqrt(2.0);
  const Eigen::Vector3cd lin45(s2 * s2, s2, -s2 * s2);  // linear at 45 deg
  return build_model(
      b_mT,
      {make_laser(Transition::green_493, 0.09, -0.03, lin45),
       make_laser(Transition::red_650, 0.06, -0.01, lin45)},
      0.095, 0.031);
}

}  // namespace

TEST_CASE("clebsch_gordan matches the closed-form rank-1 table") {
  // Independent oracle: Condon-Shortley table for <j1 m1; 1 q | J M>.
  for (double j_low : {0.5, 1.0, 1.5, 2.0, 2.5}) {
    for (double j_up : {j_low - 1.0, j_low, j_low + 1.0}) {
      if (j_up < 0.4) continue;
      for (int q = -1; q <= 1; ++q) {
        for (double m_low = -j_low; m_low <= j_low + 1e-9; m_low += 1.0) {
          const double m_up = m_low + q;
          if (std::abs(m_up) > j_up + 1e-9) continue;
          const double got = clebsch_gordan(j_up, m_up, q, j_low, m_low);
          const double want = oracles::cg_rank1_table(j_low, m_low, q, j_up);
          CHECK(got == doctest::Approx(want).epsilon(1e-13));
        }
      }
    }
  }
}

TEST_CASE("clebsch_gordan special values and completeness") {
  // stretched state
  CHECK(clebsch_gordan(1.5, 1.5, 1, 0.5, 0.5) == doctest::Approx(1.0));
  // squares over all channels out of P1/2 m=+1/2 towards S1/2 sum to one
  double sum = 0.0;
  for (int q = -1; q <= 1; ++q) {
    const double m_low = 0.5 - q;
    if (std::abs(m_low) > 0.5) continue;
    const double c = clebsch_gordan(0.5, 0.5, q, 0.5, m_low);
    sum += c * c;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  // selection rule: mismatch in m gives exactly zero
  CHECK(clebsch_gordan(0.5, 0.5, 1, 0.5, 0.5) == 0.0);
}

TEST_CASE("clebsch_gordan rejects invalid quantum numbers") {
  CHECK_THROWS_AS(clebsch_gordan(0.5, 1.5, 0, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(clebsch_gordan(-0.5, 0.5, 0, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(clebsch_gordan(0.5, 0.5, 2, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(clebsch_gordan(0.6, 0.5, 0, 0.5, 0.5), DomainError);
}

TEST_CASE("lande factors and zeeman shifts") {
  CHECK(lande_g(Term::S12) == doctest::Approx(2.0));
  CHECK(lande_g(Term::P12) == doctest::Approx(2.0 / 3.0));
  CHECK(lande_g(Term::D32) == doctest::Approx(4.0 / 5.0));

  // B = 0: all shifts vanish
  for (const auto& lv : barium_levels())
    CHECK(zeeman_shift(lv.term, lv.mj, 0.0) == 0.0);

  // B = 0.5 mT: S1/2 m=+1/2 shift is +g_S mu_B B / (2 hbar)
  const double want = 2.0 * 0.5 * units::zeeman_rad_per_ns_mT * 0.5;
  CHECK(zeeman_shift(Term::S12, 0.5, 0.5) == doctest::Approx(want).epsilon(1e-12));

  // antisymmetry in m
  for (const auto& lv : barium_levels())
    CHECK(zeeman_shift(lv.term, -lv.mj, 0.7) ==
          doctest::Approx(-zeeman_shift(lv.term, lv.mj, 0.7)));
}

TEST_CASE("build_model enumerates levels and physical decay channels") {
  const AtomModel model = default_like_model();
  CHECK(model.levels.size() == 8);

  // Selection-rule pruning leaves 4 green + 6 red channels.
  int green = 0, red = 0;
  for (const auto& ch : model.channels) {
    CHECK(ch.upper.term == Term::P12);
    if (ch.lower.term == Term::S12)
      ++green;
    else
      ++red;
    CHECK(ch.q == doctest::Approx(ch.upper.mj - ch.lower.mj));
  }
  CHECK(green == 4);
  CHECK(red == 6);

  // completeness: per upper sublevel and transition, amplitude^2 sums to 1
  for (double m_up : {-0.5, 0.5}) {
    double sum_green = 0.0, sum_red = 0.0;
    for (const auto& ch : model.channels) {
      if (std::abs(ch.upper.mj - m_up) > 1e-9) continue;
      (ch.lower.term == Term::S12 ? sum_green : sum_red) += ch.amplitude * ch.amplitude;
    }
    CHECK(sum_green == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sum_red == doctest::Approx(1.0).epsilon(1e-12));
  }

  // branch rates per transition sum to the transition rate
  double total_green = 0.0, total_red = 0.0;
  for (const auto& ch : model.channels) {
    if (std::abs(ch.upper.mj - 0.5) > 1e-9) continue;
    (ch.lower.term == Term::S12 ? total_green : total_red) += ch.branch_rate;
  }
  CHECK(total_green == doctest::Approx(model.gamma_green).epsilon(1e-12));
  CHECK(total_red == doctest::Approx(model.gamma_red).epsilon(1e-12));
}

TEST_CASE("build_model rejects bad input") {
  const Eigen::Vector3cd pi_pol(0, 1, 0);
  const auto green = make_laser(Transition::green_493, 0.1, 0.0, pi_pol);
  const auto red = make_laser(Transition::red_650, 0.1, 0.0, pi_pol);
  CHECK_THROWS_AS(build_model(0.0, {green}, 0.1, 0.03), ConfigError);
  CHECK_THROWS_AS(build_model(0.0, {green, red}, -0.1, 0.03), ConfigError);
  CHECK_THROWS_AS(build_model(0.0, {green, red}, 0.1, 0.0), ConfigError);
  auto bad = green;
  bad.polarization *= 1.5;
  CHECK_THROWS_AS(build_model(0.0, {bad, red}, 0.1, 0.03), ConfigError);
}

TEST_CASE("hamiltonian structure") {
  SUBCASE("zero Rabi frequencies give a diagonal matrix") {
    const Eigen::Vector3cd pi_pol(0, 1, 0);
    const AtomModel model = build_model(
        0.3,
        {make_laser(Transition::green_493, 0.0, -0.02, pi_pol),
         make_laser(Transition::red_650, 0.0, 0.015, pi_pol)},
        0.095, 0.031);
    const Eigen::MatrixXcd h = hamiltonian(model);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        if (i != j) CHECK(std::abs(h(i, j)) == 0.0);
    // P manifold carries -Delta_green, D carries -(Delta_green - Delta_red)
    CHECK(h(2, 2).real() ==
          doctest::Approx(zeeman_shift(Term::P12, -0.5, 0.3) + 0.02));
    CHECK(h(4, 4).real() ==
          doctest::Approx(zeeman_shift(Term::D32, -1.5, 0.3) + 0.02 + 0.015));
  }

  SUBCASE("hermitian for random laser settings") {
    std::mt19937 gen(321);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
      Eigen::Vector3cd pol_g, pol_r;
      for (int q = 0; q < 3; ++q) {
        pol_g(q) = std::complex<double>(uni(gen), uni(gen));
        pol_r(q) = std::complex<double>(uni(gen), uni(gen));
      }
      pol_g.normalize();
      pol_r.normalize();
      const AtomModel model = build_model(
          0.5 * (uni(gen) + 1.0),
          {make_laser(Transition::green_493, 0.1 * (uni(gen) + 1.0), 0.05 * uni(gen), pol_g),
           make_laser(Transition::red_650, 0.1 * (uni(gen) + 1.0), 0.05 * uni(gen), pol_r)},
          0.095, 0.031);
      const Eigen::MatrixXcd h = hamiltonian(model);
      CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  SUBCASE("two-level reduction: sigma+ coupling is -Omega/2 times CG") {
    // Only S(-1/2) <-> P(+1/2) is driven by sigma+ light.
    const Eigen::Vector3cd sigma_plus(0, 0, 1);
    const double rabi = 0.08;
    const AtomModel model = build_model(
        0.0,
        {make_laser(Transition::green_493, rabi, 0.0, sigma_plus),
         make_laser(Transition::red_650, 0.0, 0.0, sigma_plus)},
        0.095, 0.031);
    const Eigen::MatrixXcd h = hamiltonian(model);
    const double cg = clebsch_gordan(0.5, 0.5, 1, 0.5, -0.5);
    CHECK(h(3, 0).real() == doctest::Approx(-0.5 * rabi * cg).epsilon(1e-12));
    CHECK(std::abs(h(2, 0)) == 0.0);
    CHECK(std::abs(h(3, 1)) == 0.0);
  }
}

TEST_CASE("jump operators") {
  const AtomModel model = default_like_model();

  SUBCASE("per-channel operators complete to the total rate on P") {
    const auto ops = jump_operators(model);
    CHECK(ops.size() == model.channels.size());
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(8, 8);
    for (const auto& j : ops) sum += j.rate * j.op.adjoint() * j.op;
    for (int i = 2; i <= 3; ++i)
      CHECK(sum(i, i).real() ==
            doctest::Approx(model.gamma_green + model.gamma_red).epsilon(1e-12));
    // nothing outside the P manifold decays
    for (int i : {0, 1, 4, 5, 6, 7}) CHECK(std::abs(sum(i, i)) < 1e-15);
  }

  SUBCASE("green channels only populate S rows") {
    for (const auto& j : jump_operators(model)) {
      if (j.tag != Transition::green_493) continue;
      for (int row = 2; row < 8; ++row)
        for (int col = 0; col < 8; ++col) CHECK(std::abs(j.op(row, col)) == 0.0);
    }
  }

  SUBCASE("grouped collapse operators: one per polarization, same completeness") {
    const auto grouped = collapse_operators(model);
    CHECK(grouped.size() == 6);  // 3 green + 3 red
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(8, 8);
    for (const auto& j : grouped) sum += j.rate * j.op.adjoint() * j.op;
    for (int i = 2; i <= 3; ++i)
      CHECK(sum(i, i).real() ==
            doctest::Approx(model.gamma_green + model.gamma_red).epsilon(1e-12));
    CHECK((sum - sum.diagonal().asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() <
          1e-15);
  }
}
