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

namespace halfcavity::csv {

// Emission convention shared by every curve file:
//   # halfcavity curve=<name> phase_over_pi=<x> tau_ns=<x> contrast=<x> normalization=<tag>
//   # config=<compact json>          (optional; full run reproduction data)
//   <col>,<col>,...
//   rows with 9 significant digits
struct Meta {
  std::string curve;
  double phase_over_pi = 0.0;
  double tau_ns = 0.0;
  double contrast = 0.0;
  std::string normalization = "raw";
};

struct Table {
  Meta meta;
  std::string config_json;  // empty when absent
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Atomic write (temp file + rename).
void write(const std::filesystem::path& path, const Meta& meta,
           const std::string& config_json, const std::vector<std::string>& columns,
           const std::vector<std::vector<double>>& rows);

Table read(const std::filesystem::path& path);

/// %.9g formatting used for all emitted values.
std::string format_value(double v);

}  // namespace halfcavity::csv
