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

#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "halfcavity/errors.hpp"
#include "halfcavity/pipeline.hpp"

namespace {

int dispatch(const std::string& command, const std::string& config_path,
             const halfcavity::CliOptions& options) {
  using namespace halfcavity;
  const RunConfig config = RunConfig::from_file(config_path);
  RunResult result;
  if (command == "run")
    result = cmd_run(config, options);
  else if (command == "scan-phase")
    result = cmd_scan_phase(config, options);
  else
    result = cmd_oracle(config, options);

  std::cout << result.summary;
  for (const auto& f : result.files) std::cout << "wrote " << f.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"halfcavity: photon correlations of a laser-driven ion in front "
               "of a distant mirror"};
  app.require_subcommand(1);

  std::string config_path;
  std::string normalization = "raw";
  halfcavity::CliOptions options;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "config file (JSON)")->required();
    cmd->add_option("--out", options.out_dir,
                    "output directory (default: config output.directory)");
    cmd->add_option("--normalize", normalization,
                    "curve normalization: raw | asymptote | peak")
        ->check(CLI::IsMember({"raw", "asymptote", "peak"}));
    cmd->add_flag("--svg", options.svg, "also write SVG line plots");
  };

  CLI::App* run = app.add_subcommand("run", "deterministic correlation curves");
  add_common(run);
  run->add_flag("--subtract-ni", options.subtract_ni,
                "also emit the measured curve with the non-interfering part "
                "subtracted");

  CLI::App* scan = app.add_subcommand("scan-phase", "mirror-phase scan");
  add_common(scan);
  scan->add_option("--points", options.scan_points, "number of scan points")
      ->check(CLI::Range(2, 100000));

  CLI::App* oracle = app.add_subcommand("oracle", "Monte Carlo click-stream oracle");
  add_common(oracle);

  CLI11_PARSE(app, argc, argv);

  if (normalization == "asymptote")
    options.normalization = halfcavity::Normalization::unit_asymptote;
  else if (normalization == "peak")
    options.normalization = halfcavity::Normalization::unit_peak;

  const std::string command = run->parsed()    ? "run"
                              : scan->parsed() ? "scan-phase"
                                               : "oracle";
  try {
    return dispatch(command, config_path, options);
  } catch (const halfcavity::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const halfcavity::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const halfcavity::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
