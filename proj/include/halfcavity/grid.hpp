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

#include <cmath>
#include <vector>

#include "halfcavity/errors.hpp"

namespace halfcavity {

/// Uniform time grid: samples at t0 + k*dt for k = 0..n-1 (ns).
struct UniformGrid {
  double t0_ns = 0.0;
  double dt_ns = 0.0;
  int n = 0;

  UniformGrid() = default;
  UniformGrid(double t0, double dt, int count) : t0_ns(t0), dt_ns(dt), n(count) {
    if (!(dt > 0.0)) throw DomainError("grid: dt must be positive");
    if (count < 1) throw DomainError("grid: need at least one sample");
  }

  double time(int k) const { return t0_ns + k * dt_ns; }
  double t_end() const { return time(n - 1); }

  std::vector<double> times() const {
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) t[static_cast<std::size_t>(k)] = time(k);
    return t;
  }
};

/// Grid from 0 to at least t_max with step dt.
inline UniformGrid make_grid(double t_max_ns, double dt_ns) {
  if (!(dt_ns > 0.0) || !(t_max_ns >= 0.0))
    throw DomainError("grid: t_max >= 0 and dt > 0 required");
  const int n = static_cast<int>(std::ceil(t_max_ns / dt_ns - 1e-9)) + 1;
  return UniformGrid(0.0, dt_ns, n);
}

}  // namespace halfcavity
