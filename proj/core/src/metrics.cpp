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

#include "gsax/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "gsax/errors.hpp"

namespace gsax {

namespace {

constexpr int kMaxSchemeAttempts = 8;

double per_stream_power_for(const GsaScheme& scheme, double total_power) {
  double precoder_power = 0.0;
  for (const CMatrix& v : scheme.source_precoders) {
    precoder_power += v.squaredNorm();
  }
  return total_power / precoder_power;
}

// Builds a scheme for one trial, retrying on the measure-zero singular
// effective channel by drawing a fresh realization from the same stream.
void sample_trial_scheme(int m_antennas, int n_antennas, TrialSeed seed,
                         ChannelSet& channels, GsaScheme& scheme) {
  NormalStream stream(seed, StreamDomain::kChannel);
  for (int attempt = 0; attempt < kMaxSchemeAttempts; ++attempt) {
    channels = sample_channel_set(m_antennas, n_antennas, stream);
    try {
      scheme = build_gsa_scheme(channels);
      return;
    } catch (const SingularEffectiveChannel&) {
      continue;
    }
  }
  throw ChannelDegenerate("trial " + std::to_string(seed.trial_index) +
                          ": no usable realization after " +
                          std::to_string(kMaxSchemeAttempts) + " attempts");
}

}  // namespace

RatePoint sum_rate_af(const GsaScheme& scheme, const ChannelSet& channels,
                      double snr_db, double noise_variance) {
  if (!(noise_variance > 0.0)) {
    throw std::invalid_argument("sum_rate_af: noise variance must be > 0");
  }
  const StreamAllocation& alloc = scheme.alloc;
  const int m = alloc.m_antennas;

  const double total_power = std::pow(10.0, snr_db / 10.0) * noise_variance;
  const double stream_power = per_stream_power_for(scheme, total_power);
  const double beta =
      relay_gain(scheme, total_power, noise_variance, stream_power);

  const CMatrix forwarded = scheme.bc_precoder * scheme.relay_combiner;

  RatePoint point;
  point.snr_db = snr_db;
  for (int node = 1; node <= 4; ++node) {
    const CMatrix& downlink = channels.downlink(node);
    const CMatrix forwarded_noise = downlink * forwarded;
    const CMatrix noise_cov =
        noise_variance *
        (beta * beta * forwarded_noise * forwarded_noise.adjoint() +
         CMatrix::Identity(m, m));

    CMatrix member_blocks(channels.n_antennas, m);
    int col = 0;
    for (const int k : StreamAllocation::member_pairs(node)) {
      const int width = alloc.pair_height(k);
      member_blocks.middleCols(col, width) =
          scheme.bc_precoder.middleCols(alloc.pair_row_offset(k), width);
      col += width;
    }
    const CMatrix desired = beta * (downlink * member_blocks);
    const CMatrix signal_cov = stream_power * desired * desired.adjoint();

    // log2 det(I + N^{-1} S) computed as log2 det(N + S) - log2 det(N).
    const double rate = log_det_hermitian_pd(noise_cov + signal_cov) -
                        log_det_hermitian_pd(noise_cov);
    point.per_node_rate[node - 1] = std::max(rate, 0.0);
    point.sum_rate += point.per_node_rate[node - 1];
  }
  return point;
}

std::vector<double> trial_sum_rates(int m_antennas, int n_antennas,
                                    const std::vector<double>& snr_grid_db,
                                    std::uint64_t master_seed,
                                    std::uint64_t trial_index) {
  ChannelSet channels;
  GsaScheme scheme;
  sample_trial_scheme(m_antennas, n_antennas,
                      TrialSeed{master_seed, trial_index}, channels, scheme);
  std::vector<double> rates;
  rates.reserve(snr_grid_db.size());
  for (const double snr_db : snr_grid_db) {
    rates.push_back(sum_rate_af(scheme, channels, snr_db, 1.0).sum_rate);
  }
  return rates;
}

SweepResult monte_carlo_sweep(int m_antennas, int n_antennas,
                              const std::vector<double>& snr_grid_db,
                              int trials, std::uint64_t master_seed,
                              int threads) {
  if (!gsa_feasible(m_antennas, n_antennas)) {
    throw Infeasible("monte_carlo_sweep: no alignment scheme for M=" +
                     std::to_string(m_antennas) +
                     ", N=" + std::to_string(n_antennas) + " (need N >= " +
                     std::to_string(min_relay_antennas(m_antennas)) + ")");
  }
  if (trials < 1) {
    throw std::invalid_argument("monte_carlo_sweep: trials must be >= 1");
  }
  for (std::size_t i = 1; i < snr_grid_db.size(); ++i) {
    if (!(snr_grid_db[i] > snr_grid_db[i - 1])) {
      throw std::invalid_argument(
          "monte_carlo_sweep: SNR grid must be strictly increasing");
    }
  }

  const int points = static_cast<int>(snr_grid_db.size());
  std::vector<std::vector<double>> per_trial(trials);

  int workers = threads > 0
                    ? threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, trials);

  std::atomic<int> next_trial{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    for (;;) {
      const int t = next_trial.fetch_add(1);
      if (t >= trials) {
        return;
      }
      try {
        per_trial[t] = trial_sum_rates(m_antennas, n_antennas, snr_grid_db,
                                       master_seed,
                                       static_cast<std::uint64_t>(t));
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        return;
      }
    }
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
    for (std::thread& th : pool) {
      th.join();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  SweepResult result;
  result.m_antennas = m_antennas;
  result.n_antennas = n_antennas;
  result.trials = trials;
  result.master_seed = master_seed;
  result.points.resize(points);

  // Reduce in trial order: the outcome must not depend on scheduling.
  for (int p = 0; p < points; ++p) {
    double mean = 0.0;
    for (int t = 0; t < trials; ++t) {
      mean += per_trial[t][p];
    }
    mean /= trials;

    double variance = 0.0;
    if (trials > 1) {
      for (int t = 0; t < trials; ++t) {
        const double d = per_trial[t][p] - mean;
        variance += d * d;
      }
      variance /= (trials - 1);
    }

    SweepPoint& sp = result.points[p];
    sp.snr_db = snr_grid_db[p];
    sp.mean_sum_rate = mean;
    sp.std_error = trials > 1 ? std::sqrt(variance / trials) : 0.0;
    sp.trials = trials;
  }
  return result;
}

double estimate_dof(const SweepResult& sweep, double window_lo_db,
                    double window_hi_db) {
  constexpr double kEdge = 1e-9;
  std::vector<const SweepPoint*> window;
  for (const SweepPoint& p : sweep.points) {
    if (p.snr_db >= window_lo_db - kEdge && p.snr_db <= window_hi_db + kEdge) {
      window.push_back(&p);
    }
  }
  if (window.size() < 2) {
    throw InsufficientPoints("estimate_dof: " +
                             std::to_string(window.size()) +
                             " sweep points in the window; need >= 2");
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const SweepPoint* p : window) {
    mean_x += p->snr_db;
    mean_y += p->mean_sum_rate;
  }
  mean_x /= static_cast<double>(window.size());
  mean_y /= static_cast<double>(window.size());

  double sxx = 0.0;
  double sxy = 0.0;
  for (const SweepPoint* p : window) {
    const double dx = p->snr_db - mean_x;
    sxx += dx * dx;
    sxy += dx * (p->mean_sum_rate - mean_y);
  }
  return 3.0 * sxy / sxx;  // bits per 3 dB
}

}  // namespace gsax
