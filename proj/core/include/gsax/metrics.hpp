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

#pragma once

#include <cstdint>
#include <vector>

#include "gsax/transceiver.hpp"

namespace gsax {

struct RatePoint {
  double snr_db = 0.0;
  std::array<double, 4> per_node_rate{};  // bits per channel use
  double sum_rate = 0.0;
};

// Achievable amplify-and-forward sum rate for one channel realization.
// snr_db is the ratio of total source transmit power to the per-antenna noise
// variance; the relay spends the same total power. Per node, the rate is the
// Gaussian mutual information of the M post-self-cancellation partner streams
// against the forwarded-plus-local noise covariance.
RatePoint sum_rate_af(const GsaScheme& scheme, const ChannelSet& channels,
                      double snr_db, double noise_variance);

struct SweepPoint {
  double snr_db = 0.0;
  double mean_sum_rate = 0.0;
  double std_error = 0.0;
  int trials = 0;
};

struct SweepResult {
  int m_antennas = 0;
  int n_antennas = 0;
  int trials = 0;
  std::uint64_t master_seed = 0;
  std::vector<SweepPoint> points;
};

// Sum rates of one seeded trial at each SNR point. The channel realization
// depends only on (master_seed, trial_index), so a trial is a pure function
// usable from any thread.
std::vector<double> trial_sum_rates(int m_antennas, int n_antennas,
                                    const std::vector<double>& snr_grid_db,
                                    std::uint64_t master_seed,
                                    std::uint64_t trial_index);

// Monte Carlo mean/standard-error of the sum rate over a strictly increasing
// SNR grid. Trials are scheduled across `threads` workers (0 = hardware
// concurrency); aggregation runs in trial order, so the result is identical
// for any thread count.
SweepResult monte_carlo_sweep(int m_antennas, int n_antennas,
                              const std::vector<double>& snr_grid_db,
                              int trials, std::uint64_t master_seed,
                              int threads = 0);

// Least-squares slope of mean sum rate over the window [window_lo_db,
// window_hi_db], scaled to bits per 3 dB: the empirical DoF.
double estimate_dof(const SweepResult& sweep, double window_lo_db,
                    double window_hi_db);

}  // namespace gsax
