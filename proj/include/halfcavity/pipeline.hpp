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

#include <filesystem>
#include <string>
#include <vector>

#include "halfcavity/config.hpp"
#include "halfcavity/correlation.hpp"

namespace halfcavity {

struct CliOptions {
  std::filesystem::path out_dir;  // empty: use config's output directory
  bool subtract_ni = false;
  Normalization normalization = Normalization::raw;
  bool svg = false;
  int scan_points = 33;
};

struct RunResult {
  std::vector<std::filesystem::path> files;
  std::string summary;
};

/// Deterministic pipeline: free-space g2, amplitude b, mirror-mode g2,
/// non-interfering g2 and the contrast-weighted measured mixture, written as
/// CSV (plus SVG on request) with a steady-state summary.
RunResult cmd_run(const RunConfig& config, const CliOptions& options);

/// Mirror-mode curves across a phase scan plus a summary table
/// (phase, g2(0), asymptote, peak, fringe).
RunResult cmd_scan_phase(const RunConfig& config, const CliOptions& options);

/// Stochastic oracle: click stream, lag histogram, and an overlay pairing
/// each histogram bin with the deterministic expectation for chi^2 checks.
RunResult cmd_oracle(const RunConfig& config, const CliOptions& options);

}  // namespace halfcavity
