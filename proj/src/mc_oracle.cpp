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

#include "halfcavity/mc_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <ostream>

#include "halfcavity/errors.hpp"
#include "halfcavity/rng.hpp"

namespace halfcavity {

namespace {

using complexd = std::complex<double>;

// RNG stream ids so that chained operations on the same user seed stay
// statistically independent.
constexpr std::uint64_t kStreamTrajectory = 0;
constexpr std::uint64_t kStreamMirror = 1;
constexpr std::uint64_t kStreamDark = 2;

// No-jump walker. The effective generator A = -iH - (1/2) sum gamma J^dag J
// is constant, so stretches between jumps propagate exactly through its
// eigensystem; the fixed step only sets the resolution of threshold checks.
class JumpWalker {
 public:
  JumpWalker(const QuantumSystem& sys, std::uint64_t seed)
      : sys_(sys), rng_(seed, kStreamTrajectory) {
    const int dim = sys.dim();
    double rate_sum = 0.0;
    Eigen::MatrixXcd a = complexd(0.0, -1.0) * sys.hamiltonian;
    for (const auto& j : sys.jumps) {
      a -= 0.5 * j.rate * (j.op.adjoint() * j.op);
      rate_sum += j.rate;
    }
    if (!(rate_sum > 0.0)) throw DomainError("system has no decay channels");
    rate_sum_ = rate_sum;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a);
    if (es.info() != Eigen::Success)
      throw NumericalError("effective Hamiltonian eigendecomposition failed");
    v_ = es.eigenvectors();
    evals_ = es.eigenvalues();
    vinv_ = v_.inverse();
    if ((v_ * evals_.asDiagonal() * vinv_ - a).norm() > 1e-9 * (1.0 + a.norm()))
      throw NumericalError("effective Hamiltonian is numerically defective");

    step_ = 1.0 / (100.0 * rate_sum_);
    ustep_ = propagator(step_);

    psi_ = Eigen::VectorXcd::Zero(dim);
    psi_(ground_index()) = 1.0;
    threshold_ = rng_.uniform_open01();
  }

  double rate_sum() const { return rate_sum_; }

  double excited_population() const {
    double p = 0.0;
    for (int i : sys_.excited_levels) p += std::norm(psi_(i));
    return p / psi_.squaredNorm();
  }

  /// Advance exactly span ns, appending green click times (absolute).
  void advance(double span, std::vector<double>& clicks) {
    double remaining = span;
    while (remaining > 1e-12) {
      const bool full = remaining >= step_;
      const double s = full ? step_ : remaining;
      scratch_ = full ? (ustep_ * psi_).eval() : propagate(psi_, s);
      if (scratch_.squaredNorm() > threshold_) {
        psi_.swap(scratch_);
        t_ += s;
        remaining -= s;
        continue;
      }
      // Survival crossed the threshold inside (0, s]; bisect the jump time.
      double lo = 0.0, hi = s;
      for (int it = 0; it < 45; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (propagate(psi_, mid).squaredNorm() > threshold_)
          lo = mid;
        else
          hi = mid;
      }
      const double s_jump = 0.5 * (lo + hi);
      const Eigen::VectorXcd at_jump = propagate(psi_, s_jump);
      do_jump(at_jump, clicks, t_ + s_jump);
      t_ += s_jump;
      remaining -= s_jump;
    }
  }

 private:
  int ground_index() const {
    for (int i = 0; i < sys_.dim(); ++i) {
      if (std::find(sys_.excited_levels.begin(), sys_.excited_levels.end(), i) ==
          sys_.excited_levels.end())
        return i;
    }
    throw DomainError("system has no ground level");
  }

  Eigen::MatrixXcd propagator(double s) const {
    return v_ * (evals_.array() * s).exp().matrix().asDiagonal() * vinv_;
  }

  Eigen::VectorXcd propagate(const Eigen::VectorXcd& psi, double s) const {
    return v_ * ((evals_.array() * s).exp() * (vinv_ * psi).array()).matrix();
  }

  void do_jump(const Eigen::VectorXcd& psi, std::vector<double>& clicks,
               double when) {
    weights_.clear();
    double total = 0.0;
    for (const auto& j : sys_.jumps) {
      const double w = j.rate * (j.op * psi).squaredNorm();
      total += w;
      weights_.push_back(total);
    }
    if (!(total > 0.0))
      throw NumericalError("jump triggered with zero channel weight");
    const double pick = rng_.uniform01() * total;
    std::size_t k = 0;
    while (k + 1 < weights_.size() && pick >= weights_[k]) ++k;

    if (sys_.jumps[k].tag == Transition::green_493) clicks.push_back(when);
    psi_ = sys_.jumps[k].op * psi;
    psi_.normalize();
    threshold_ = rng_.uniform_open01();
  }

  const QuantumSystem& sys_;
  PhiloxRng rng_;
  Eigen::MatrixXcd v_, vinv_, ustep_;
  Eigen::VectorXcd evals_;
  Eigen::VectorXcd psi_, scratch_;
  std::vector<double> weights_;
  double rate_sum_ = 0.0;
  double step_ = 0.0;
  double threshold_ = 0.0;
  double t_ = 0.0;
};

}  // namespace

std::vector<double> Histogram::normalized() const {
  std::vector<double> out;
  out.reserve(counts.size());
  for (auto c : counts)
    out.push_back(static_cast<double>(c) / integration_time_ns);
  return out;
}

ClickStream simulate_clicks(const QuantumSystem& sys, double duration_ns,
                            std::uint64_t seed) {
  JumpWalker walker(sys, seed);
  if (!(duration_ns * walker.rate_sum() >= 10.0))
    throw DomainError("duration too short: need duration >> 1/Gamma");

  ClickStream stream;
  stream.duration_ns = duration_ns;
  stream.seed = seed;
  stream.source = ClickSource::direct;
  walker.advance(duration_ns, stream.times_ns);
  return stream;
}

TrajectorySample simulate_trajectory(const QuantumSystem& sys,
                                     const UniformGrid& grid,
                                     std::uint64_t seed) {
  if (std::abs(grid.t0_ns) > 1e-12)
    throw DomainError("trajectory grid must start at t = 0");
  JumpWalker walker(sys, seed);

  TrajectorySample sample;
  sample.clicks.duration_ns = grid.t_end();
  sample.clicks.seed = seed;
  sample.excited_population.reserve(static_cast<std::size_t>(grid.n));
  sample.excited_population.push_back(walker.excited_population());
  for (int k = 1; k < grid.n; ++k) {
    walker.advance(grid.dt_ns, sample.clicks.times_ns);
    sample.excited_population.push_back(walker.excited_population());
  }
  return sample;
}

ClickStream apply_mirror_delay(const ClickStream& stream, double tau_ns,
                               double p_reflect, std::uint64_t seed) {
  if (!(tau_ns >= 0.0)) throw DomainError("tau must be >= 0");
  if (!(p_reflect >= 0.0 && p_reflect <= 1.0))
    throw DomainError("p_reflect must lie in [0, 1]");

  ClickStream out = stream;
  PhiloxRng rng(seed, kStreamMirror);
  for (double& t : out.times_ns)
    if (rng.uniform01() < p_reflect) t += tau_ns;
  std::sort(out.times_ns.begin(), out.times_ns.end());
  out.source = p_reflect == 0.0   ? stream.source
               : p_reflect == 1.0 ? ClickSource::reflected
                                  : ClickSource::mixed;
  return out;
}

ClickStream add_dark_counts(const ClickStream& stream, double rate_per_ns,
                            std::uint64_t seed) {
  if (!(rate_per_ns >= 0.0)) throw DomainError("dark rate must be >= 0");
  if (rate_per_ns == 0.0) return stream;

  PhiloxRng rng(seed, kStreamDark);
  std::vector<double> dark;
  for (double t = rng.exponential(rate_per_ns); t <= stream.duration_ns;
       t += rng.exponential(rate_per_ns))
    dark.push_back(t);

  ClickStream out;
  out.duration_ns = stream.duration_ns;
  out.seed = stream.seed;
  out.source = ClickSource::mixed;
  out.times_ns.resize(stream.times_ns.size() + dark.size());
  std::merge(stream.times_ns.begin(), stream.times_ns.end(), dark.begin(),
             dark.end(), out.times_ns.begin());
  return out;
}

Histogram correlate(const ClickStream& stream, double bin_width_ns,
                    double max_lag_ns) {
  if (!(bin_width_ns > 0.0)) throw DomainError("bin width must be positive");
  if (!(max_lag_ns <= stream.duration_ns / 10.0))
    throw DomainError("max_lag must not exceed duration / 10");
  const std::size_t n_bins =
      static_cast<std::size_t>(std::floor(max_lag_ns / bin_width_ns + 1e-9));
  if (n_bins < 1) throw DomainError("max_lag shorter than one bin");

  Histogram hist;
  hist.bin_width_ns = bin_width_ns;
  hist.integration_time_ns = stream.duration_ns;
  hist.counts.assign(n_bins, 0);

  const auto& t = stream.times_ns;
  const double window = hist.max_lag_ns();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i + 1] < t[i]) throw DomainError("click stream is not sorted");
    for (std::size_t j = i + 1; j < t.size() && t[j] - t[i] <= window; ++j) {
      const double lag = t[j] - t[i];
      if (lag <= 0.0) continue;
      const auto bin = static_cast<std::size_t>(std::ceil(lag / bin_width_ns)) - 1;
      if (bin < n_bins) ++hist.counts[bin];
    }
  }
  return hist;
}

void write_click_stream(std::ostream& os, const ClickStream& stream) {
  const char* source = stream.source == ClickSource::direct      ? "direct"
                       : stream.source == ClickSource::reflected ? "reflected"
                                                                 : "mixed";
  char line[128];
  std::snprintf(line, sizeof line,
                "# halfcavity clicks seed=%llu duration_ns=%.6f source=%s n=%zu\n",
                static_cast<unsigned long long>(stream.seed), stream.duration_ns,
                source, stream.times_ns.size());
  os << line;
  for (double t : stream.times_ns) {
    std::snprintf(line, sizeof line, "%.6f\n", t);
    os << line;
  }
}

}  // namespace halfcavity
