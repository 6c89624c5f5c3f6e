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

#include "halfcavity/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "halfcavity/errors.hpp"

namespace halfcavity::csv {

namespace {

std::string meta_line(const Meta& meta) {
  std::string line = "# halfcavity curve=" + meta.curve;
  line += " phase_over_pi=" + format_value(meta.phase_over_pi);
  line += " tau_ns=" + format_value(meta.tau_ns);
  line += " contrast=" + format_value(meta.contrast);
  line += " normalization=" + meta.normalization;
  return line;
}

std::string field(const std::string& line, const std::string& key) {
  const std::string token = key + "=";
  const auto pos = line.find(token);
  if (pos == std::string::npos)
    throw DomainError("csv header: missing field '" + key + "'");
  const auto start = pos + token.size();
  const auto end = line.find(' ', start);
  return line.substr(start, end == std::string::npos ? end : end - start);
}

}  // namespace

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write(const std::filesystem::path& path, const Meta& meta,
           const std::string& config_json, const std::vector<std::string>& columns,
           const std::vector<std::vector<double>>& rows) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw DomainError("cannot open output file: " + tmp.string());
    os << meta_line(meta) << '\n';
    if (!config_json.empty()) os << "# config=" << config_json << '\n';
    for (std::size_t c = 0; c < columns.size(); ++c)
      os << columns[c] << (c + 1 < columns.size() ? "," : "");
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        os << format_value(row[c]) << (c + 1 < row.size() ? "," : "");
      os << '\n';
    }
  }
  std::filesystem::rename(tmp, path);
}

Table read(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw DomainError("cannot open csv file: " + path.string());

  Table table;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# halfcavity curve=", 0) != 0)
    throw DomainError("csv: missing halfcavity header in " + path.string());
  table.meta.curve = field(line, "curve");
  table.meta.phase_over_pi = std::stod(field(line, "phase_over_pi"));
  table.meta.tau_ns = std::stod(field(line, "tau_ns"));
  table.meta.contrast = std::stod(field(line, "contrast"));
  table.meta.normalization = field(line, "normalization");

  while (std::getline(is, line)) {
    if (line.rfind("# config=", 0) == 0) {
      table.config_json = line.substr(9);
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    break;  // column header reached
  }
  {
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, ',')) table.columns.push_back(col);
  }

  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != table.columns.size())
      throw DomainError("csv: ragged row in " + path.string());
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace halfcavity::csv
