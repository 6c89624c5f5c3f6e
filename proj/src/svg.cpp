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

#include "halfcavity/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "halfcavity/csv.hpp"
#include "halfcavity/errors.hpp"

namespace halfcavity::svg {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 50;

struct Scale {
  double lo, hi, pixel_lo, pixel_hi;
  double operator()(double v) const {
    const double f = (v - lo) / (hi - lo);
    return pixel_lo + f * (pixel_hi - pixel_lo);
  }
};

std::vector<double> ticks(double lo, double hi, int target = 6) {
  const double span = hi - lo;
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> out;
  for (double v = std::ceil(lo / step) * step; v <= hi + 1e-12 * span; v += step)
    out.push_back(v);
  return out;
}

}  // namespace

void plot_csv(const std::filesystem::path& csv_path,
              const std::filesystem::path& svg_path) {
  const csv::Table table = csv::read(csv_path);
  if (table.columns.size() < 2 || table.rows.empty())
    throw DomainError("svg: need at least two columns and one row");

  double xlo = table.rows.front()[0], xhi = xlo;
  double ylo = table.rows.front()[1], yhi = ylo;
  for (const auto& row : table.rows) {
    xlo = std::min(xlo, row[0]);
    xhi = std::max(xhi, row[0]);
    ylo = std::min(ylo, row[1]);
    yhi = std::max(yhi, row[1]);
  }
  if (xhi == xlo) xhi = xlo + 1.0;
  if (yhi == ylo) yhi = ylo + 1.0;
  const double pad = 0.05 * (yhi - ylo);
  ylo = std::min(0.0, ylo - pad);
  yhi += pad;

  const Scale sx{xlo, xhi, kLeft, kWidth - kRight};
  const Scale sy{ylo, yhi, kHeight - kBottom, kTop};

  std::ofstream os(svg_path, std::ios::binary | std::ios::trunc);
  if (!os) throw DomainError("svg: cannot open " + svg_path.string());
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
     << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"22\" font-family=\"sans-serif\" "
        "font-size=\"15\" text-anchor=\"middle\">"
     << table.meta.curve << " (" << table.meta.normalization << ")</text>\n";

  // axes + ticks
  os << "<g stroke=\"#444\" stroke-width=\"1\" font-family=\"sans-serif\" "
        "font-size=\"11\">\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
     << kWidth - kRight << "\" y2=\"" << kHeight - kBottom << "\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
     << "\" y2=\"" << kHeight - kBottom << "\"/>\n";
  for (double v : ticks(xlo, xhi)) {
    const double x = sx(v);
    os << "<line x1=\"" << x << "\" y1=\"" << kHeight - kBottom << "\" x2=\"" << x
       << "\" y2=\"" << kHeight - kBottom + 5 << "\"/>\n";
    os << "<text x=\"" << x << "\" y=\"" << kHeight - kBottom + 18
       << "\" text-anchor=\"middle\" stroke=\"none\" fill=\"#222\">"
       << csv::format_value(v) << "</text>\n";
  }
  for (double v : ticks(ylo, yhi)) {
    const double y = sy(v);
    os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft
       << "\" y2=\"" << y << "\"/>\n";
    os << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4
       << "\" text-anchor=\"end\" stroke=\"none\" fill=\"#222\">"
       << csv::format_value(v) << "</text>\n";
  }
  os << "</g>\n";

  os << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 10
     << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">"
     << table.columns[0] << "</text>\n";

  os << "<polyline fill=\"none\" stroke=\"#0b6e4f\" stroke-width=\"1.5\" points=\"";
  for (const auto& row : table.rows)
    os << sx(row[0]) << "," << sy(row[1]) << " ";
  os << "\"/>\n</svg>\n";
}

}  // namespace halfcavity::svg
