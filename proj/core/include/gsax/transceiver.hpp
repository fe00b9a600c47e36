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

#include <array>

#include "gsax/gsa.hpp"

namespace gsax {

// One frame of transmit symbols in the stacked 4M layout. per_stream_power is
// the model power P_s = E|symbol|^2; exactness tests may supply arbitrary
// deterministic symbols instead of random draws.
struct SymbolFrame {
  CVector symbols;  // 4M x 1
  double per_stream_power = 1.0;
};

// Unit-power complex Gaussian symbols scaled by sqrt(per_stream_power).
SymbolFrame random_symbol_frame(const StreamAllocation& alloc,
                                double per_stream_power, TrialSeed seed);

struct MacResult {
  CVector relay_input;     // y_r, N x 1
  CVector relay_estimate;  // A * y_r, 2M x 1
};

// First hop: every source transmits V_i * s_i simultaneously; the relay
// applies its combiner. With zero noise the estimate equals P * s, the
// network-coded symbol vector.
MacResult mac_phase(const GsaScheme& scheme, const ChannelSet& channels,
                    const SymbolFrame& frame, double noise_variance,
                    TrialSeed noise_seed);

// Amplitude beta scaling the relay transmit vector x_r = beta * U * estimate
// so that E||x_r||^2 = relay_power under the scheme's signal covariance model
// (2 * P_s per network-coded entry plus forwarded noise).
double relay_gain(const GsaScheme& scheme, double relay_power,
                  double noise_variance);

// Same, with an explicit per-stream power overriding the scheme's value.
double relay_gain(const GsaScheme& scheme, double relay_power,
                  double noise_variance, double per_stream_power);

// Second hop: the relay broadcasts and each destination i receives
// y_i = G_{r,i} * x_r + n_i. Beamformer nulling confines each y_i to the two
// network-coded blocks the destination participates in.
std::array<CVector, 4> bc_phase(const GsaScheme& scheme,
                                const ChannelSet& channels,
                                const CVector& relay_estimate,
                                double relay_power, double noise_variance,
                                TrialSeed noise_seed);

// Zero-forcing recovery at one destination: invert the M x M effective
// downlink, undo beta, subtract the node's own symbols, and return the two
// partner stream blocks (member-pair order). Exact at zero noise.
CVector decode_destination(int node, const CVector& received,
                           const GsaScheme& scheme, const ChannelSet& channels,
                           const CVector& own_symbols, double beta);

struct TransmissionResult {
  CVector relay_estimate;                // 2M x 1
  std::array<CVector, 4> received;       // y_i, M x 1 each
  std::array<CVector, 4> recovered;      // partner estimates, M x 1 each
  double noise_variance = 0.0;
};

// Full two-phase round trip for one frame.
TransmissionResult run_transmission(const GsaScheme& scheme,
                                    const ChannelSet& channels,
                                    const SymbolFrame& frame,
                                    double noise_variance, double relay_power,
                                    TrialSeed noise_seed);

// A node's own M outgoing symbols within a stacked frame (its layout order).
CVector own_symbols_of(int node, const StreamAllocation& alloc,
                       const CVector& stacked);

// The M symbols destined to a node, in the order decode_destination emits
// them (member-pair ascending).
CVector partner_symbols_of(int node, const StreamAllocation& alloc,
                           const CVector& stacked);

}  // namespace gsax
