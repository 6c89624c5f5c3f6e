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

#include "halfcavity/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "halfcavity/errors.hpp"
#include "halfcavity/units.hpp"

namespace halfcavity {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::string& where,
                  const std::set<std::string>& required,
                  const std::set<std::string>& optional = {}) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, _] : j.items()) {
    if (!required.count(key) && !optional.count(key))
      throw ConfigError(where + ": unknown key '" + key + "'");
  }
  for (const auto& key : required) {
    if (!j.contains(key))
      throw ConfigError(where + ": missing required key '" + key + "'");
  }
}

double get_number(const json& j, const std::string& where, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number())
    throw ConfigError(where + "." + key + ": expected a number");
  return v.get<double>();
}

LaserConfig parse_laser(const json& j, const std::string& where) {
  require_keys(j, where, {"rabi_MHz", "detuning_MHz", "polarization"});
  LaserConfig laser;
  laser.rabi_MHz = get_number(j, where, "rabi_MHz");
  laser.detuning_MHz = get_number(j, where, "detuning_MHz");
  laser.polarization = j.at("polarization");
  parse_polarization(laser.polarization);  // validate now, fail early
  if (laser.rabi_MHz < 0.0) throw ConfigError(where + ".rabi_MHz: must be >= 0");
  return laser;
}

}  // namespace

Eigen::Vector3cd parse_polarization(const nlohmann::json& j) {
  Eigen::Vector3cd pol;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "pi") {
      pol = Eigen::Vector3cd(0.0, 1.0, 0.0);
    } else if (s == "sigma+" || s == "sigma_plus") {
      pol = Eigen::Vector3cd(0.0, 0.0, 1.0);
    } else if (s == "sigma-" || s == "sigma_minus") {
      pol = Eigen::Vector3cd(1.0, 0.0, 0.0);
    } else if (s.rfind("linear:", 0) == 0) {
      double deg = 0.0;
      try {
        deg = std::stod(s.substr(7));
      } catch (const std::exception&) {
        throw ConfigError("polarization: cannot parse angle in '" + s + "'");
      }
      // Linear polarization at an angle theta to the quantization axis:
      // spherical components (sin/sqrt2, cos, -sin/sqrt2).
      const double th = deg * units::pi / 180.0;
      pol = Eigen::Vector3cd(std::sin(th) / std::sqrt(2.0), std::cos(th),
                             -std::sin(th) / std::sqrt(2.0));
    } else {
      throw ConfigError("polarization: unknown form '" + s +
                        "' (pi, sigma+, sigma-, linear:<deg>, or a 3-array)");
    }
  } else if (j.is_array() && j.size() == 3) {
    for (int q = 0; q < 3; ++q) {
      const auto& c = j[static_cast<std::size_t>(q)];
      if (c.is_number()) {
        pol(q) = c.get<double>();
      } else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
        pol(q) = std::complex<double>(c[0].get<double>(), c[1].get<double>());
      } else {
        throw ConfigError("polarization: component must be a number or [re, im]");
      }
    }
  } else {
    throw ConfigError("polarization: expected a string or a 3-array");
  }

  const double norm = pol.norm();
  if (std::abs(norm - 1.0) > 1e-6)
    throw ConfigError("polarization: norm differs from 1 by more than 1e-6");
  return pol / norm;
}

double RunConfig::resolved_tau_ns() const {
  if (tau_ns) return *tau_ns;
  return units::retardation_ns(*L_cm);
}

AtomModel RunConfig::make_model() const {
  LaserField g;
  g.transition = Transition::green_493;
  g.rabi_rad_ns = units::rad_per_ns(green.rabi_MHz);
  g.detuning_rad_ns = units::rad_per_ns(green.detuning_MHz);
  g.polarization = parse_polarization(green.polarization);

  LaserField r;
  r.transition = Transition::red_650;
  r.rabi_rad_ns = units::rad_per_ns(red.rabi_MHz);
  r.detuning_rad_ns = units::rad_per_ns(red.detuning_MHz);
  r.polarization = parse_polarization(red.polarization);

  return build_model(b_field_mT, {g, r}, units::rad_per_ns(gamma_green_MHz),
                     units::rad_per_ns(gamma_red_MHz));
}

MirrorConfig RunConfig::make_mirror() const {
  MirrorConfig m;
  m.tau_ns = resolved_tau_ns();
  m.phase = phase_over_pi * units::pi;
  m.contrast = contrast;
  m.epsilon = epsilon;
  m.validate();
  return m;
}

UniformGrid RunConfig::make_grid() const {
  return ::halfcavity::make_grid(t_max_ns, dt_ns);
}

RunConfig RunConfig::defaults() {
  RunConfig c;
  c.b_field_mT = 0.4;
  c.gamma_green_MHz = 15.1;
  c.gamma_red_MHz = 5.3;
  c.green = {20.0, -4.0, "linear:55"};
  c.red = {25.0, -1.0, "linear:65"};
  c.L_cm = 67.0;
  c.phase_over_pi = 0.06;
  c.contrast = 0.5;
  c.epsilon = 0.015;
  c.t_max_ns = 40.0;
  c.dt_ns = 0.05;
  c.oracle_duration_s = 0.002;
  c.seed = 20493;
  c.dark_rate_hz = 0.0;
  c.p_reflect = 0.0;
  c.amplitude_mode = AmplitudeMode::population_sqrt;
  c.out_dir = "out";
  return c;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  require_keys(j, "config", {"atom", "mirror", "grid"},
               {"oracle", "amplitude_mode", "output"});

  RunConfig c;

  const json& atom = j.at("atom");
  require_keys(atom, "atom",
               {"b_field_mT", "gamma_green_MHz", "gamma_red_MHz", "green", "red"});
  c.b_field_mT = get_number(atom, "atom", "b_field_mT");
  c.gamma_green_MHz = get_number(atom, "atom", "gamma_green_MHz");
  c.gamma_red_MHz = get_number(atom, "atom", "gamma_red_MHz");
  if (!(c.gamma_green_MHz > 0.0) || !(c.gamma_red_MHz > 0.0))
    throw ConfigError("atom: decay rates must be positive");
  c.green = parse_laser(atom.at("green"), "atom.green");
  c.red = parse_laser(atom.at("red"), "atom.red");

  const json& mirror = j.at("mirror");
  require_keys(mirror, "mirror", {"phase_over_pi"},
               {"L_cm", "tau_ns", "contrast", "epsilon"});
  if (mirror.contains("L_cm") == mirror.contains("tau_ns"))
    throw ConfigError("mirror: exactly one of L_cm or tau_ns must be given");
  if (mirror.contains("L_cm")) c.L_cm = get_number(mirror, "mirror", "L_cm");
  if (mirror.contains("tau_ns")) c.tau_ns = get_number(mirror, "mirror", "tau_ns");
  c.phase_over_pi = get_number(mirror, "mirror", "phase_over_pi");
  if (mirror.contains("contrast")) c.contrast = get_number(mirror, "mirror", "contrast");
  if (mirror.contains("epsilon")) c.epsilon = get_number(mirror, "mirror", "epsilon");
  if (c.resolved_tau_ns() < 0.0) throw ConfigError("mirror: retardation must be >= 0");
  if (!(c.contrast >= 0.0 && c.contrast <= 1.0))
    throw ConfigError("mirror.contrast: must lie in [0, 1]");
  if (!(c.epsilon >= 0.0 && c.epsilon <= 1.0))
    throw ConfigError("mirror.epsilon: must lie in [0, 1]");

  const json& grid = j.at("grid");
  require_keys(grid, "grid", {"t_max_ns", "dt_ns"});
  c.t_max_ns = get_number(grid, "grid", "t_max_ns");
  c.dt_ns = get_number(grid, "grid", "dt_ns");
  if (!(c.dt_ns > 0.0) || !(c.t_max_ns > 0.0))
    throw ConfigError("grid: t_max_ns and dt_ns must be positive");
  const double tau = c.resolved_tau_ns();
  if (tau > 0.0 && c.dt_ns > 0.1 * tau + 1e-12)
    throw ConfigError("grid.dt_ns: must be <= 0.1 * tau so the kink at T = tau is resolved");

  if (j.contains("oracle")) {
    const json& oracle = j.at("oracle");
    require_keys(oracle, "oracle", {"duration_s", "seed"},
                 {"dark_rate_hz", "p_reflect"});
    c.oracle_duration_s = get_number(oracle, "oracle", "duration_s");
    if (!oracle.at("seed").is_number_unsigned())
      throw ConfigError("oracle.seed: expected an unsigned integer");
    c.seed = oracle.at("seed").get<std::uint64_t>();
    if (oracle.contains("dark_rate_hz"))
      c.dark_rate_hz = get_number(oracle, "oracle", "dark_rate_hz");
    if (oracle.contains("p_reflect"))
      c.p_reflect = get_number(oracle, "oracle", "p_reflect");
    if (c.oracle_duration_s < 0.0) throw ConfigError("oracle.duration_s: must be >= 0");
    if (c.dark_rate_hz < 0.0) throw ConfigError("oracle.dark_rate_hz: must be >= 0");
    if (!(c.p_reflect >= 0.0 && c.p_reflect <= 1.0))
      throw ConfigError("oracle.p_reflect: must lie in [0, 1]");
  }

  if (j.contains("amplitude_mode")) {
    const std::string mode = j.at("amplitude_mode").get<std::string>();
    if (mode == "population_sqrt")
      c.amplitude_mode = AmplitudeMode::population_sqrt;
    else if (mode == "two_level_amplitude")
      c.amplitude_mode = AmplitudeMode::two_level_amplitude;
    else
      throw ConfigError("amplitude_mode: unknown mode '" + mode + "'");
  }

  if (j.contains("output")) {
    require_keys(j.at("output"), "output", {}, {"directory"});
    if (j.at("output").contains("directory"))
      c.out_dir = j.at("output").at("directory").get<std::string>();
  }
  return c;
}

RunConfig RunConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config parse error in " + path.string() + ": " + e.what());
  }
  return from_json(j);
}

nlohmann::json RunConfig::to_json() const {
  json j;
  j["atom"] = {{"b_field_mT", b_field_mT},
               {"gamma_green_MHz", gamma_green_MHz},
               {"gamma_red_MHz", gamma_red_MHz},
               {"green",
                {{"rabi_MHz", green.rabi_MHz},
                 {"detuning_MHz", green.detuning_MHz},
                 {"polarization", green.polarization}}},
               {"red",
                {{"rabi_MHz", red.rabi_MHz},
                 {"detuning_MHz", red.detuning_MHz},
                 {"polarization", red.polarization}}}};
  j["mirror"] = {{"phase_over_pi", phase_over_pi},
                 {"contrast", contrast},
                 {"epsilon", epsilon}};
  if (L_cm)
    j["mirror"]["L_cm"] = *L_cm;
  else
    j["mirror"]["tau_ns"] = *tau_ns;
  j["grid"] = {{"t_max_ns", t_max_ns}, {"dt_ns", dt_ns}};
  j["oracle"] = {{"duration_s", oracle_duration_s},
                 {"seed", seed},
                 {"dark_rate_hz", dark_rate_hz},
                 {"p_reflect", p_reflect}};
  j["amplitude_mode"] = to_string(amplitude_mode);
  j["output"] = {{"directory", out_dir}};
  return j;
}

}  // namespace halfcavity
