// Copyright 2026 The gsax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: feasibility reports, scheme verification, and
// Monte Carlo SNR sweeps for the two-way X relay alignment scheme.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "gsax/errors.hpp"
#include "gsax/runner.hpp"

int main(int argc, char** argv) {
  gsax::RunConfig config;
  std::string mode = "feasibility";

  CLI::App app{"Generalized signal alignment for the MIMO two-way X relay "
               "channel: feasibility, construction checks, sum-rate sweeps"};
  app.add_option("--mode", mode, "One of: feasibility, verify, sweep")
      ->check(CLI::IsMember({"feasibility", "verify", "sweep"}))
      ->capture_default_str();
  app.add_option("--m-antennas", config.m_antennas,
                 "Antennas per source node (M)")
      ->capture_default_str();
  app.add_option("--n-antennas", config.n_antennas, "Relay antennas (N)")
      ->capture_default_str();
  app.add_option("--snr-start", config.snr_start_db, "Sweep start SNR in dB")
      ->capture_default_str();
  app.add_option("--snr-stop", config.snr_stop_db, "Sweep stop SNR in dB")
      ->capture_default_str();
  app.add_option("--snr-step", config.snr_step_db, "Sweep SNR step in dB")
      ->capture_default_str();
  app.add_option("--trials", config.trials,
                 "Channel realizations per sweep point / verification draws")
      ->capture_default_str();
  app.add_option("--seed", config.master_seed, "Master seed")
      ->capture_default_str();
  app.add_option("--output", config.output_path,
                 "Sweep CSV destination ('-' = stdout)")
      ->capture_default_str();
  app.add_option("--threads", config.threads,
                 "Worker threads for sweeps (0 = hardware concurrency, "
                 "1 = serial)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gsax::kExitConfigError;
  }

  static const std::map<std::string, gsax::RunMode> kModes = {
      {"feasibility", gsax::RunMode::kFeasibility},
      {"verify", gsax::RunMode::kVerify},
      {"sweep", gsax::RunMode::kSweep},
  };
  config.mode = kModes.at(mode);

  try {
    return gsax::run(config, std::cout);
  } catch (const gsax::Infeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gsax::kExitConfigError;
  } catch (const gsax::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gsax::kExitCheckFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return gsax::kExitConfigError;
  }
}
