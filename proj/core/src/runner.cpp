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

#include "gsax/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "gsax/errors.hpp"
#include "gsax/metrics.hpp"

namespace gsax {

namespace {

constexpr double kAlignmentLimit = 1e-8;
constexpr double kExclusionLimit = 1e-8;
constexpr double kRecoveryLimit = 1e-6;
constexpr double kDofWindowDb = 9.0;

int validate_antennas(const RunConfig& config, std::ostream& out) {
  if (config.m_antennas < 1 || config.n_antennas < 1) {
    out << "error: antenna counts must be >= 1\n";
    return kExitConfigError;
  }
  return kExitSuccess;
}

std::vector<double> snr_grid(const RunConfig& config) {
  std::vector<double> grid;
  if (config.snr_start_db == config.snr_stop_db) {
    grid.push_back(config.snr_start_db);
    return grid;
  }
  const double span = config.snr_stop_db - config.snr_start_db;
  const int count = static_cast<int>(span / config.snr_step_db + 1e-9) + 1;
  grid.reserve(count);
  for (int i = 0; i < count; ++i) {
    grid.push_back(config.snr_start_db + i * config.snr_step_db);
  }
  return grid;
}

// Largest nulling residual relative to the corresponding channel norm:
// combiner blocks against excluded uplinks and excluded downlinks against
// beamformer blocks.
double max_exclusion_residual(const GsaScheme& scheme,
                              const ChannelSet& channels) {
  const StreamAllocation& alloc = scheme.alloc;
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    const int height = alloc.pair_height(k);
    const int offset = alloc.pair_row_offset(k);
    for (const int excluded : StreamAllocation::excluded_sources(k)) {
      const CMatrix& uplink = channels.uplink(excluded);
      const double up_res =
          (scheme.relay_combiner.middleRows(offset, height) * uplink).norm() /
          uplink.norm();
      const CMatrix& downlink = channels.downlink(excluded);
      const double down_res =
          (downlink * scheme.bc_precoder.middleCols(offset, height)).norm() /
          downlink.norm();
      worst = std::max({worst, up_res, down_res});
    }
  }
  return worst;
}

double alignment_residual(const GsaScheme& scheme, const ChannelSet& channels) {
  const CMatrix effective = scheme.relay_combiner * stacked_uplink(channels) *
                            block_diagonal(scheme.source_precoders);
  return (effective - scheme.pattern.matrix).norm() /
         scheme.pattern.matrix.norm();
}

double recovery_error(const GsaScheme& scheme, const ChannelSet& channels,
                      std::uint64_t master_seed, std::uint64_t trial) {
  const TrialSeed seed{master_seed, trial};
  const SymbolFrame frame =
      random_symbol_frame(scheme.alloc, scheme.per_stream_power, seed);
  const TransmissionResult result = run_transmission(
      scheme, channels, frame, /*noise_variance=*/0.0,
      /*relay_power=*/static_cast<double>(scheme.alloc.total_streams()), seed);
  double worst = 0.0;
  for (int node = 1; node <= 4; ++node) {
    const CVector expected =
        partner_symbols_of(node, scheme.alloc, frame.symbols);
    worst = std::max(
        worst,
        (result.recovered[node - 1] - expected).cwiseAbs().maxCoeff());
  }
  return worst;
}

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

int run_feasibility(const RunConfig& config, std::ostream& out) {
  const int rc = validate_antennas(config, out);
  if (rc != kExitSuccess) {
    return rc;
  }
  const int m = config.m_antennas;
  const int n = config.n_antennas;

  out << "config: M=" << m << " N=" << n << "\n";
  out << "SA (direct alignment, N < 2M): "
      << (sa_feasible(m, n) ? "feasible" : "infeasible") << "\n";

  if (n < 2 * m) {
    out << "GSA (N >= 2M branch): not applicable (N < 2M)\n";
  } else if (gsa_feasible(m, n)) {
    out << "GSA: feasible\n";
  } else {
    out << "GSA: infeasible (need N >= " << min_relay_antennas(m)
        << " for M = " << m << ")\n";
  }
  out << "DoF upper bound: " << dof_upper_bound(m, n) << "\n";

  if (gsa_feasible(m, n)) {
    const StreamAllocation alloc = allocate_streams(m);
    out << "stream allocation:";
    for (int k = 0; k < 4; ++k) {
      const auto [i, j] = StreamAllocation::kPairOrder[k];
      out << " d" << i << j << "=" << alloc.pair_height(k);
    }
    out << " (d_ij = d_ji)\n";
    const int max_height =
        *std::max_element(alloc.pair_streams.begin(), alloc.pair_streams.end());
    out << "binding constraint: N - 2M >= " << max_height << " (have "
        << n - 2 * m << ")\n";
  }
  return kExitSuccess;
}

int run_verify(const RunConfig& config, std::ostream& out) {
  int rc = validate_antennas(config, out);
  if (rc != kExitSuccess) {
    return rc;
  }
  const int m = config.m_antennas;
  const int n = config.n_antennas;
  if (!gsa_feasible(m, n)) {
    out << "error: no alignment scheme for M=" << m << ", N=" << n
        << " (need N >= " << min_relay_antennas(m) << ")\n";
    return kExitConfigError;
  }
  if (config.trials < 1) {
    out << "error: trials must be >= 1\n";
    return kExitConfigError;
  }

  double worst_alignment = 0.0;
  double worst_exclusion = 0.0;
  double worst_recovery = 0.0;
  for (int t = 0; t < config.trials; ++t) {
    const ChannelSet channels = sample_channel_set(
        m, n, TrialSeed{config.master_seed, static_cast<std::uint64_t>(t)});
    const GsaScheme scheme = build_gsa_scheme(channels);
    worst_alignment =
        std::max(worst_alignment, alignment_residual(scheme, channels));
    worst_exclusion =
        std::max(worst_exclusion, max_exclusion_residual(scheme, channels));
    worst_recovery = std::max(
        worst_recovery, recovery_error(scheme, channels, config.master_seed,
                                       static_cast<std::uint64_t>(t)));
  }

  const bool pass = worst_alignment < kAlignmentLimit &&
                    worst_exclusion < kExclusionLimit &&
                    worst_recovery < kRecoveryLimit;
  out << "verify: M=" << m << " N=" << n << " trials=" << config.trials
      << " seed=" << config.master_seed << "\n";
  out << "max alignment residual: " << format_value(worst_alignment)
      << " (limit " << format_value(kAlignmentLimit) << ")\n";
  out << "max exclusion residual: " << format_value(worst_exclusion)
      << " (limit " << format_value(kExclusionLimit) << ")\n";
  out << "max zero-noise recovery error: " << format_value(worst_recovery)
      << " (limit " << format_value(kRecoveryLimit) << ")\n";
  out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? kExitSuccess : kExitCheckFailure;
}

int run_sweep(const RunConfig& config, std::ostream& diagnostics) {
  int rc = validate_antennas(config, diagnostics);
  if (rc != kExitSuccess) {
    return rc;
  }
  if (config.snr_start_db > config.snr_stop_db || config.snr_step_db <= 0.0 ||
      config.trials < 1) {
    diagnostics << "error: sweep needs snr_start <= snr_stop, snr_step > 0 "
                   "and trials >= 1\n";
    return kExitConfigError;
  }
  if (!gsa_feasible(config.m_antennas, config.n_antennas)) {
    diagnostics << "error: no alignment scheme for M=" << config.m_antennas
                << ", N=" << config.n_antennas << " (need N >= "
                << min_relay_antennas(config.m_antennas) << ")\n";
    return kExitConfigError;
  }

  const std::vector<double> grid = snr_grid(config);
  const SweepResult sweep =
      monte_carlo_sweep(config.m_antennas, config.n_antennas, grid,
                        config.trials, config.master_seed, config.threads);

  std::ostringstream csv;
  csv << "snr_db,mean_sum_rate_bits,std_err,trials\n";
  for (const SweepPoint& p : sweep.points) {
    csv << format_value(p.snr_db) << "," << format_value(p.mean_sum_rate)
        << "," << format_value(p.std_error) << "," << p.trials << "\n";
  }

  const double window_lo =
      std::max(config.snr_start_db, config.snr_stop_db - kDofWindowDb);
  const int in_window = static_cast<int>(
      std::count_if(grid.begin(), grid.end(), [&](double s) {
        return s >= window_lo - 1e-9;
      }));
  if (in_window >= 2) {
    const double dof = estimate_dof(sweep, window_lo, config.snr_stop_db);
    char line[128];
    std::snprintf(line, sizeof(line), "# dof_estimate=%.10g window=%g-%gdB\n",
                  dof, window_lo, config.snr_stop_db);
    csv << line;
  }

  if (config.output_path == "-") {
    std::cout << csv.str();
    std::cout.flush();
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
      diagnostics << "error: cannot open output file '" << config.output_path
                  << "'\n";
      return kExitCheckFailure;
    }
    file << csv.str();
    if (!file.good()) {
      diagnostics << "error: write failed for '" << config.output_path
                  << "'\n";
      return kExitCheckFailure;
    }
  }
  return kExitSuccess;
}

int run(const RunConfig& config, std::ostream& out) {
  switch (config.mode) {
    case RunMode::kFeasibility:
      return run_feasibility(config, out);
    case RunMode::kVerify:
      return run_verify(config, out);
    case RunMode::kSweep:
      return run_sweep(config, out);
  }
  out << "error: unknown mode\n";
  return kExitConfigError;
}

}  // namespace gsax
