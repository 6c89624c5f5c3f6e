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

#include "halfcavity/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "halfcavity/csv.hpp"
#include "halfcavity/dynamics.hpp"
#include "halfcavity/errors.hpp"
#include "halfcavity/mc_oracle.hpp"
#include "halfcavity/svg.hpp"
#include "halfcavity/units.hpp"

namespace halfcavity {

namespace fs = std::filesystem;

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

double tail_mean(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  const std::size_t tail = std::max<std::size_t>(1, n / 10);
  double sum = 0.0;
  for (std::size_t i = n - tail; i < n; ++i) sum += samples[i];
  return sum / static_cast<double>(tail);
}

fs::path resolve_out_dir(const RunConfig& config, const CliOptions& options) {
  const fs::path out = options.out_dir.empty() ? fs::path(config.out_dir)
                                               : options.out_dir;
  fs::create_directories(out);
  return out;
}

struct CurveEmitter {
  fs::path out;
  std::string config_json;
  double phase_over_pi, tau_ns, contrast;
  bool svg = false;
  std::vector<fs::path>* files;

  void emit(const std::string& name, const CorrelationCurve& curve) const {
    csv::Meta meta{name, phase_over_pi, tau_ns, contrast,
                   to_string(curve.normalization)};
    std::vector<std::vector<double>> rows;
    rows.reserve(curve.samples.size());
    for (int k = 0; k < curve.grid.n; ++k)
      rows.push_back({curve.grid.time(k), curve.samples[static_cast<std::size_t>(k)]});
    const fs::path path = out / (name + ".csv");
    csv::write(path, meta, config_json, {"T_ns", "value"}, rows);
    files->push_back(path);
    if (svg) {
      const fs::path sp = out / (name + ".svg");
      svg::plot_csv(path, sp);
      files->push_back(sp);
    }
  }
};

// Linear interpolation over a correlation curve (exact at nodes).
double curve_at(const CorrelationCurve& c, double t) {
  const double rel = (t - c.grid.t0_ns) / c.grid.dt_ns;
  const int i = std::clamp(static_cast<int>(rel), 0, c.grid.n - 2);
  const double frac = rel - i;
  const auto& s = c.samples;
  if (std::abs(frac) < 1e-9) return s[static_cast<std::size_t>(i)];
  if (std::abs(frac - 1.0) < 1e-9) return s[static_cast<std::size_t>(i + 1)];
  return (1.0 - frac) * s[static_cast<std::size_t>(i)] +
         frac * s[static_cast<std::size_t>(i + 1)];
}

std::string steady_summary(const QuantumSystem& sys, const Eigen::MatrixXcd& rho_ss) {
  double p_s = rho_ss(0, 0).real() + rho_ss(1, 1).real();
  double p_p = rho_ss(2, 2).real() + rho_ss(3, 3).real();
  double p_d = 0.0;
  for (int i = 4; i < 8; ++i) p_d += rho_ss(i, i).real();
  const double rate = emission_rate(sys, rho_ss, Transition::green_493);

  std::string s = "steady state: P(S1/2)=" + fmt("%.6f", p_s) +
                  " P(P1/2)=" + fmt("%.6f", p_p) + " P(D3/2)=" + fmt("%.6f", p_d) +
                  "\ngreen emission rate: " + fmt("%.6g", rate * 1e3) +
                  " per microsecond\n";
  if (p_p < 1e-6)
    s += "WARNING: steady-state P1/2 population < 1e-6 (dark configuration); "
         "correlation curves will be ~0\n";
  return s;
}

}  // namespace

RunResult cmd_run(const RunConfig& config, const CliOptions& options) {
  RunResult result;
  const fs::path out = resolve_out_dir(config, options);
  const std::string cfg_json = config.to_json().dump();

  const AtomModel model = config.make_model();
  const QuantumSystem sys = make_system(model);
  const MirrorConfig mirror = config.make_mirror();
  const UniformGrid grid = config.make_grid();

  const Liouvillian liou = build_liouvillian(sys);
  const Eigen::MatrixXcd rho_ss = steady_state(liou);
  result.summary = steady_summary(sys, rho_ss);
  result.summary += "tau_ns=" + fmt("%.6g", mirror.tau_ns) +
                    " phase_over_pi=" + fmt("%.6g", config.phase_over_pi) + "\n";

  const CorrelationCurve g2_free = g2_free_space(sys, grid);
  const UniformGrid b_grid =
      make_grid(grid.t_end() + mirror.tau_ns + 2.0 * grid.dt_ns, grid.dt_ns);
  const AmplitudeCurve b = amplitude_bP(model, b_grid, config.amplitude_mode);
  const CorrelationCurve gm = g2_mirror(b, mirror, grid);
  const CorrelationCurve gni = g2_noninterfering(b, mirror.tau_ns, grid);
  const CorrelationCurve gmeas = mix_measured(gm, gni, mirror.contrast);

  CurveEmitter emitter{out,           cfg_json,       config.phase_over_pi,
                       mirror.tau_ns, mirror.contrast, options.svg,
                       &result.files};
  emitter.emit("g2_free", normalize(g2_free, options.normalization));
  emitter.emit("g2_mirror", normalize(gm, options.normalization));
  emitter.emit("g2_ni", normalize(gni, options.normalization));
  emitter.emit("g2_measured", normalize(gmeas, options.normalization));
  if (options.subtract_ni) {
    CorrelationCurve sub = gmeas;
    for (std::size_t i = 0; i < sub.samples.size(); ++i)
      sub.samples[i] = std::max(
          0.0, sub.samples[i] - (1.0 - mirror.contrast) * gni.samples[i]);
    emitter.emit("g2_measured_minus_ni", normalize(sub, options.normalization));
  }

  // amplitude curve; two columns in the complex comparison mode
  {
    csv::Meta meta{"b_amplitude", config.phase_over_pi, mirror.tau_ns,
                   mirror.contrast, "raw"};
    std::vector<std::string> columns = {"T_ns", "value"};
    std::vector<std::vector<double>> rows;
    const bool complex_mode = b.mode == AmplitudeMode::two_level_amplitude;
    if (complex_mode) columns = {"T_ns", "re", "im"};
    for (int k = 0; k < b.grid.n; ++k) {
      const auto v = b.samples[static_cast<std::size_t>(k)];
      if (complex_mode)
        rows.push_back({b.grid.time(k), v.real(), v.imag()});
      else
        rows.push_back({b.grid.time(k), v.real()});
    }
    const fs::path path = out / "b_amplitude.csv";
    csv::write(path, meta, cfg_json, columns, rows);
    result.files.push_back(path);
    if (options.svg) {
      const fs::path sp = out / "b_amplitude.svg";
      svg::plot_csv(path, sp);
      result.files.push_back(sp);
    }
  }
  return result;
}

RunResult cmd_scan_phase(const RunConfig& config, const CliOptions& options) {
  if (options.scan_points < 2)
    throw ConfigError("scan-phase: need at least 2 points");
  RunResult result;
  const fs::path out = resolve_out_dir(config, options);
  const std::string cfg_json = config.to_json().dump();

  const AtomModel model = config.make_model();
  const MirrorConfig mirror0 = config.make_mirror();
  const UniformGrid grid = config.make_grid();
  const UniformGrid b_grid =
      make_grid(grid.t_end() + mirror0.tau_ns + 2.0 * grid.dt_ns, grid.dt_ns);
  const AmplitudeCurve b = amplitude_bP(model, b_grid, config.amplitude_mode);

  CurveEmitter emitter{out,            cfg_json,        0.0, mirror0.tau_ns,
                       mirror0.contrast, options.svg, &result.files};

  std::vector<double> phases_over_pi;
  std::vector<std::vector<double>> summary_rows;
  const int n = options.scan_points;
  for (int i = 0; i < n; ++i) {
    const double x = 2.0 * i / (n - 1);  // phase/pi in [0, 2]
    phases_over_pi.push_back(x);
    MirrorConfig mirror = mirror0;
    mirror.phase = x * units::pi;
    const CorrelationCurve gm = g2_mirror(b, mirror, grid);

    emitter.phase_over_pi = x;
    char name[48];
    std::snprintf(name, sizeof name, "g2_mirror_phase_%.4f", x);
    emitter.emit(name, gm);

    summary_rows.push_back({x, gm.samples.front(), tail_mean(gm.samples),
                            *std::max_element(gm.samples.begin(), gm.samples.end()),
                            0.0});
  }

  std::vector<double> phases_rad;
  for (double x : phases_over_pi) phases_rad.push_back(x * units::pi);
  const std::vector<double> fr = fringe(phases_rad);
  for (std::size_t i = 0; i < summary_rows.size(); ++i) summary_rows[i][4] = fr[i];

  csv::Meta meta{"phase_scan_summary", 0.0, mirror0.tau_ns, mirror0.contrast, "raw"};
  const fs::path summary_path = out / "phase_scan_summary.csv";
  csv::write(summary_path, meta, cfg_json,
             {"phase_over_pi", "g2_0", "asymptote", "peak", "fringe"}, summary_rows);
  result.files.push_back(summary_path);

  std::vector<std::vector<double>> fringe_rows;
  for (std::size_t i = 0; i < fr.size(); ++i)
    fringe_rows.push_back({phases_over_pi[i], fr[i]});
  csv::Meta fmeta{"fringe", 0.0, mirror0.tau_ns, mirror0.contrast, "raw"};
  const fs::path fringe_path = out / "fringe.csv";
  csv::write(fringe_path, fmeta, cfg_json, {"phase_over_pi", "value"}, fringe_rows);
  result.files.push_back(fringe_path);

  result.summary = "scanned " + std::to_string(n) + " phases; g2(0) spread " +
                   fmt("%.3g", [&] {
                     double lo = summary_rows.front()[1], hi = lo;
                     for (const auto& r : summary_rows) {
                       lo = std::min(lo, r[1]);
                       hi = std::max(hi, r[1]);
                     }
                     return hi - lo;
                   }()) +
                   "\n";
  return result;
}

RunResult cmd_oracle(const RunConfig& config, const CliOptions& options) {
  if (!(config.oracle_duration_s > 0.0))
    throw ConfigError("oracle: duration_s must be positive");
  RunResult result;
  const fs::path out = resolve_out_dir(config, options);
  const std::string cfg_json = config.to_json().dump();

  const AtomModel model = config.make_model();
  const QuantumSystem sys = make_system(model);
  const double duration_ns = config.oracle_duration_s * 1e9;
  const double tau = config.resolved_tau_ns();
  const double bin = 0.5;  // ns
  const double max_lag = std::floor(config.t_max_ns / bin) * bin;
  if (max_lag > duration_ns / 10.0)
    throw ConfigError("oracle: duration too short for the requested lag range");

  ClickStream stream = simulate_clicks(sys, duration_ns, config.seed);
  const std::size_t direct_clicks = stream.times_ns.size();
  if (config.p_reflect > 0.0)
    stream = apply_mirror_delay(stream, tau, config.p_reflect, config.seed);
  const double dark_per_ns = config.dark_rate_hz * 1e-9;
  if (dark_per_ns > 0.0) stream = add_dark_counts(stream, dark_per_ns, config.seed);

  const Histogram hist = correlate(stream, bin, max_lag);

  // Deterministic expectation: raw pair-rate density, reweighted for the
  // delayed fraction, plus the flat dark-count floor.
  const Liouvillian liou = build_liouvillian(sys);
  const Eigen::MatrixXcd rho_ss = steady_state(liou);
  const double rate_ss = emission_rate(sys, rho_ss, Transition::green_493);
  const UniformGrid ref_grid = make_grid(max_lag + tau + 1.0, bin / 2.0);
  const CorrelationCurve raw = g2_free_space(sys, ref_grid);
  const double p = config.p_reflect;

  auto density = [&](double t) {
    return ((1.0 - p) * (1.0 - p) + p * p) * curve_at(raw, t) +
           p * (1.0 - p) *
               (curve_at(raw, std::abs(t - tau)) + curve_at(raw, t + tau)) +
           2.0 * rate_ss * dark_per_ns + dark_per_ns * dark_per_ns;
  };
  std::vector<std::vector<double>> overlay_rows;
  std::size_t within = 0;
  for (std::size_t k = 0; k < hist.counts.size(); ++k) {
    const double T = hist.bin_center(k);
    // Simpson over the bin; the dip at T = 0 bends too hard for a midpoint rule
    const double expected =
        duration_ns * (bin / 6.0) *
        (density(T - 0.5 * bin) + 4.0 * density(T) + density(T + 0.5 * bin));
    const double observed = static_cast<double>(hist.counts[k]);
    const double z = expected > 0.0 ? (observed - expected) / std::sqrt(expected)
                                    : (observed > 0.0 ? 1e9 : 0.0);
    if (std::abs(z) <= 2.0) ++within;
    overlay_rows.push_back({T, observed, expected, z});
  }

  // clicks
  const fs::path clicks_path = out / "clicks.txt";
  {
    const fs::path tmp = clicks_path.string() + ".tmp";
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    write_click_stream(os, stream);
    os.close();
    fs::rename(tmp, clicks_path);
  }
  result.files.push_back(clicks_path);

  // histogram (normalized by integration time, per the TTSPC convention)
  {
    csv::Meta meta{"histogram", config.phase_over_pi, tau, config.contrast,
                   "counts-per-ns"};
    std::vector<std::vector<double>> rows;
    const auto norm = hist.normalized();
    for (std::size_t k = 0; k < norm.size(); ++k)
      rows.push_back({hist.bin_center(k), norm[k]});
    const fs::path path = out / "histogram.csv";
    csv::write(path, meta, cfg_json, {"T_ns", "value"}, rows);
    result.files.push_back(path);
    if (options.svg) {
      const fs::path sp = out / "histogram.svg";
      svg::plot_csv(path, sp);
      result.files.push_back(sp);
    }
  }

  // overlay for chi^2 reporting
  {
    csv::Meta meta{"oracle_overlay", config.phase_over_pi, tau, config.contrast,
                   "counts"};
    const fs::path path = out / "overlay.csv";
    csv::write(path, meta, cfg_json, {"T_ns", "observed", "expected", "z"},
               overlay_rows);
    result.files.push_back(path);
  }

  const double frac = overlay_rows.empty()
                          ? 1.0
                          : static_cast<double>(within) /
                                static_cast<double>(overlay_rows.size());
  result.summary = "clicks: " + std::to_string(direct_clicks) + " direct";
  if (stream.times_ns.size() != direct_clicks)
    result.summary += ", " + std::to_string(stream.times_ns.size()) + " total";
  result.summary += "\nbins within 2 sigma: " + std::to_string(within) + "/" +
                    std::to_string(overlay_rows.size()) + " (" +
                    fmt("%.1f", 100.0 * frac) + "%)\n";
  return result;
}

}  // namespace halfcavity
