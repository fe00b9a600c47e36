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

#include "gsax/transceiver.hpp"

#include <cmath>
#include <string>

#include "gsax/errors.hpp"

namespace gsax {

namespace {

CVector draw_noise(Eigen::Index length, double variance,
                   NormalStream& stream) {
  CVector noise = CVector::Zero(length);
  if (variance > 0.0) {
    const double scale = std::sqrt(variance);
    for (Eigen::Index i = 0; i < length; ++i) {
      noise(i) = scale * stream.next_complex_normal();
    }
  }
  return noise;
}

void check_scheme_matches(const GsaScheme& scheme, const ChannelSet& channels) {
  if (scheme.alloc.m_antennas != channels.m_antennas ||
      scheme.relay_combiner.cols() != channels.n_antennas) {
    throw DimensionMismatch("scheme was built for a different antenna "
                            "configuration than the channel set");
  }
}

// G~_i = G_{r,i} * [U_p U_q] restricted to the node's member blocks.
CMatrix effective_downlink(int node, const GsaScheme& scheme,
                           const ChannelSet& channels) {
  const StreamAllocation& alloc = scheme.alloc;
  const int m = alloc.m_antennas;
  CMatrix member_blocks(channels.n_antennas, m);
  int col = 0;
  for (const int k : StreamAllocation::member_pairs(node)) {
    const int width = alloc.pair_height(k);
    member_blocks.middleCols(col, width) =
        scheme.bc_precoder.middleCols(alloc.pair_row_offset(k), width);
    col += width;
  }
  return channels.downlink(node) * member_blocks;
}

}  // namespace

SymbolFrame random_symbol_frame(const StreamAllocation& alloc,
                                double per_stream_power, TrialSeed seed) {
  NormalStream stream(seed, StreamDomain::kSymbols);
  SymbolFrame frame;
  frame.per_stream_power = per_stream_power;
  frame.symbols = CVector(alloc.total_streams());
  const double scale = std::sqrt(per_stream_power);
  for (Eigen::Index i = 0; i < frame.symbols.size(); ++i) {
    frame.symbols(i) = scale * stream.next_complex_normal();
  }
  return frame;
}

MacResult mac_phase(const GsaScheme& scheme, const ChannelSet& channels,
                    const SymbolFrame& frame, double noise_variance,
                    TrialSeed noise_seed) {
  check_scheme_matches(scheme, channels);
  const StreamAllocation& alloc = scheme.alloc;
  const int m = alloc.m_antennas;
  if (frame.symbols.size() != alloc.total_streams()) {
    throw DimensionMismatch("mac_phase: frame length " +
                            std::to_string(frame.symbols.size()) +
                            " != " + std::to_string(alloc.total_streams()));
  }

  NormalStream noise_stream(noise_seed, StreamDomain::kRelayNoise);
  MacResult result;
  result.relay_input =
      draw_noise(channels.n_antennas, noise_variance, noise_stream);
  for (int source = 1; source <= 4; ++source) {
    const CVector transmit =
        scheme.source_precoders[source - 1] *
        frame.symbols.segment(alloc.source_col_offset(source), m);
    result.relay_input += channels.uplink(source) * transmit;
  }
  result.relay_estimate = scheme.relay_combiner * result.relay_input;
  return result;
}

double relay_gain(const GsaScheme& scheme, double relay_power,
                  double noise_variance) {
  return relay_gain(scheme, relay_power, noise_variance,
                    scheme.per_stream_power);
}

double relay_gain(const GsaScheme& scheme, double relay_power,
                  double noise_variance, double per_stream_power) {
  const CMatrix& combiner = scheme.relay_combiner;
  const CMatrix& precoder = scheme.bc_precoder;
  // Covariance of the relay estimate: 2 P_s I (each network-coded entry sums
  // two independent streams) plus the combined noise A A^H.
  const CMatrix estimate_cov =
      2.0 * per_stream_power *
          CMatrix::Identity(combiner.rows(), combiner.rows()) +
      noise_variance * combiner * combiner.adjoint();
  const double expected_power =
      (precoder * estimate_cov * precoder.adjoint()).real().trace();
  if (!(expected_power > 0.0)) {
    throw std::invalid_argument(
        "relay_gain: expected transmit power is not positive; "
        "set a positive per-stream power or noise variance");
  }
  return std::sqrt(relay_power / expected_power);
}

std::array<CVector, 4> bc_phase(const GsaScheme& scheme,
                                const ChannelSet& channels,
                                const CVector& relay_estimate,
                                double relay_power, double noise_variance,
                                TrialSeed noise_seed) {
  check_scheme_matches(scheme, channels);
  if (relay_estimate.size() != scheme.alloc.relay_streams()) {
    throw DimensionMismatch("bc_phase: relay estimate length " +
                            std::to_string(relay_estimate.size()) + " != " +
                            std::to_string(scheme.alloc.relay_streams()));
  }
  const double beta = relay_gain(scheme, relay_power, noise_variance);
  const CVector relay_transmit = beta * (scheme.bc_precoder * relay_estimate);

  std::array<CVector, 4> received;
  for (int node = 1; node <= 4; ++node) {
    NormalStream noise_stream(noise_seed, node_noise_domain(node));
    received[node - 1] = channels.downlink(node) * relay_transmit +
                         draw_noise(channels.m_antennas, noise_variance,
                                    noise_stream);
  }
  return received;
}

CVector decode_destination(int node, const CVector& received,
                           const GsaScheme& scheme, const ChannelSet& channels,
                           const CVector& own_symbols, double beta) {
  check_scheme_matches(scheme, channels);
  const int m = scheme.alloc.m_antennas;
  if (received.size() != m || own_symbols.size() != m) {
    throw DimensionMismatch("decode_destination: expected length-" +
                            std::to_string(m) + " received/own vectors");
  }
  CMatrix equalizer;
  try {
    equalizer = invert(effective_downlink(node, scheme, channels));
  } catch (const SingularMatrix&) {
    throw SingularEffectiveChannel(
        "decode_destination: effective downlink for node " +
        std::to_string(node) + " is singular");
  }
  const CVector network_coded = equalizer * received / beta;
  return network_coded - own_symbols;
}

TransmissionResult run_transmission(const GsaScheme& scheme,
                                    const ChannelSet& channels,
                                    const SymbolFrame& frame,
                                    double noise_variance, double relay_power,
                                    TrialSeed noise_seed) {
  TransmissionResult result;
  result.noise_variance = noise_variance;

  const MacResult mac =
      mac_phase(scheme, channels, frame, noise_variance, noise_seed);
  result.relay_estimate = mac.relay_estimate;
  result.received = bc_phase(scheme, channels, mac.relay_estimate, relay_power,
                             noise_variance, noise_seed);

  const double beta = relay_gain(scheme, relay_power, noise_variance);
  for (int node = 1; node <= 4; ++node) {
    const CVector own = own_symbols_of(node, scheme.alloc, frame.symbols);
    result.recovered[node - 1] = decode_destination(
        node, result.received[node - 1], scheme, channels, own, beta);
  }
  return result;
}

CVector own_symbols_of(int node, const StreamAllocation& alloc,
                       const CVector& stacked) {
  // A node's outgoing blocks are contiguous and already in member-pair order.
  return stacked.segment(alloc.source_col_offset(node), alloc.m_antennas);
}

CVector partner_symbols_of(int node, const StreamAllocation& alloc,
                           const CVector& stacked) {
  CVector partners(alloc.m_antennas);
  int row = 0;
  for (const int k : StreamAllocation::member_pairs(node)) {
    const auto [i, j] = StreamAllocation::kPairOrder[k];
    const int partner = (i == node) ? j : i;
    const int count = alloc.pair_height(k);
    partners.segment(row, count) =
        stacked.segment(alloc.stream_col_offset(partner, node), count);
    row += count;
  }
  return partners;
}

}  // namespace gsax
