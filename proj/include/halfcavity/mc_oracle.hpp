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

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "halfcavity/grid.hpp"
#include "halfcavity/system.hpp"

namespace halfcavity {

// Stochastic cross-check of the deterministic pipeline: quantum-jump
// trajectories emit timestamped green clicks, and a time-tag correlator
// histograms them the way the experiment does. The oracle covers the
// NON-interfering observables only; independently delayed clicks cannot
// represent interference of single-photon partial waves, so the interfering
// mirror curve is validated against its analytic limits instead.

enum class ClickSource { direct, reflected, mixed };

/// Sorted green-photon arrival times over a fixed integration window.
struct ClickStream {
  std::vector<double> times_ns;
  double duration_ns = 0.0;
  std::uint64_t seed = 0;
  ClickSource source = ClickSource::direct;
};

/// Pair-lag histogram; bin k covers lag in (k*w, (k+1)*w].
struct Histogram {
  double bin_width_ns = 0.0;
  std::vector<std::uint64_t> counts;
  double integration_time_ns = 0.0;

  double max_lag_ns() const { return bin_width_ns * static_cast<double>(counts.size()); }
  double bin_center(std::size_t k) const { return (static_cast<double>(k) + 0.5) * bin_width_ns; }
  /// Counts divided by the total integration time (1/ns per bin).
  std::vector<double> normalized() const;
};

/// Quantum-jump unraveling of the system's master equation. No-jump stretches
/// evolve under the exact propagator of H_eff = H - (i/2) sum gamma J^dag J;
/// jumps are located by inverse-CDF sampling of the survival probability with
/// sub-step bisection of the crossing time. Green jumps become clicks, red
/// jumps are applied silently. Reproducible for a fixed (config, seed).
ClickStream simulate_clicks(const QuantumSystem& sys, double duration_ns,
                            std::uint64_t seed);

/// One trajectory sampled on a grid: normalized excited-state population at
/// each grid time plus the clicks it emitted (for ensemble-consistency tests).
struct TrajectorySample {
  std::vector<double> excited_population;
  ClickStream clicks;
};
TrajectorySample simulate_trajectory(const QuantumSystem& sys,
                                     const UniformGrid& grid, std::uint64_t seed);

/// Model of the non-interfering mirror configuration: each click is
/// independently delayed by tau with probability p_reflect, then re-sorted.
ClickStream apply_mirror_delay(const ClickStream& stream, double tau_ns,
                               double p_reflect, std::uint64_t seed);

/// Superpose a Poisson background of the given rate (1/ns).
ClickStream add_dark_counts(const ClickStream& stream, double rate_per_ns,
                            std::uint64_t seed);

/// All ordered pairs with lag in (0, max_lag], binned; sliding-window pair
/// count over the sorted stream, O(n k). Requires max_lag <= duration / 10.
Histogram correlate(const ClickStream& stream, double bin_width_ns,
                    double max_lag_ns);

/// Text export: header with seed/duration/source, one arrival time per line
/// (ns, 6 decimals).
void write_click_stream(std::ostream& os, const ClickStream& stream);

}  // namespace halfcavity
