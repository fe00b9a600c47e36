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
#include <utility>

#include "gsax/channel.hpp"
#include "gsax/linalg.hpp"

namespace gsax {

// The two-way X relay network pairs each of sources {1,2} with each of
// sources {3,4}. Everything below is laid out against the fixed pair order
//   pair 0: (1,3)   pair 1: (1,4)   pair 2: (2,3)   pair 3: (2,4)
// and the stacked symbol layout
//   [ s13 s14 | s23 s24 | s31 s32 | s41 s42 ],
// where each source's two outgoing blocks appear partner-ascending.

// Per-pair stream counts d_ij (d_ij == d_ji). Each source sends M streams
// total; the relay carries 2M network-coded streams.
struct StreamAllocation {
  int m_antennas = 0;
  std::array<int, 4> pair_streams{};  // heights for pairs (1,3),(1,4),(2,3),(2,4)

  static constexpr std::array<std::pair<int, int>, 4> kPairOrder{
      {{1, 3}, {1, 4}, {2, 3}, {2, 4}}};

  int pair_height(int pair) const { return pair_streams[pair]; }
  int relay_streams() const;  // 2M
  int total_streams() const;  // 4M

  // d_ij for an ordered source pair (one endpoint in {1,2}, the other in
  // {3,4}); symmetric in its arguments.
  int streams(int from, int to) const;

  // Row offset of a pair's block inside the 2M relay layout.
  int pair_row_offset(int pair) const;

  // Column offsets inside the 4M stacked symbol layout.
  int source_col_offset(int source) const;
  int stream_col_offset(int from, int to) const;

  // The two pairs a source participates in, ascending in pair order.
  static std::array<int, 2> member_pairs(int source);

  // The two sources a pair's combiner/beamformer must null out.
  static std::array<int, 2> excluded_sources(int pair);
};

// Even M: every d_ij = M/2. Odd M: d_13 = d_24 = (M+1)/2 and
// d_14 = d_23 = (M-1)/2 (mirrored for the reverse directions).
StreamAllocation allocate_streams(int m_antennas);

// Direct-subspace alignment needs more source than relay dimensions: N < 2M.
bool sa_feasible(int m_antennas, int n_antennas);

// Alignment in the relay-transformed subspace: M <= floor(2N/5) for even M,
// M <= floor((2N-1)/5) for odd M. Equivalent to N - 2M >= max block height.
bool gsa_feasible(int m_antennas, int n_antennas);

// Smallest relay antenna count for which gsa_feasible(m_antennas, n) holds.
int min_relay_antennas(int m_antennas);

// Cut-set bound 2*min(2M, N) on the total DoF; equals 4M whenever N >= 2M.
int dof_upper_bound(int m_antennas, int n_antennas);

// 2M x 4M selection matrix P with entries in {0,1}. Row block k carries ones
// at the two column blocks holding the streams pair k exchanges, so P maps
// the stacked symbol vector to the network-coded vector: P*s = s_plus.
struct AlignmentPattern {
  CMatrix matrix;
};

AlignmentPattern expected_pattern(const StreamAllocation& alloc);

// Relay combiner A (2M x N). Row block k is an orthonormal set spanned by the
// null space of the stacked transposes of the two excluded uplinks, so block k
// annihilates both: A_k * H_{e,r} = 0 for each excluded source e.
// Throws InsufficientNullSpace when N - 2M is smaller than a block height.
CMatrix build_relay_combiner(const ChannelSet& channels,
                             const StreamAllocation& alloc);

// Zero-forcing source precoders V_1..V_4 (each M x M). For source i, C_i
// stacks the two surviving combiner-times-uplink blocks and V_i = C_i^{-1};
// jointly with A this aligns each pair's streams: A * H * V = P.
// Throws SingularEffectiveChannel when some C_i is numerically singular.
std::array<CMatrix, 4> build_source_precoders(const CMatrix& relay_combiner,
                                              const ChannelSet& channels,
                                              const StreamAllocation& alloc);

// Broadcast precoder U (N x 2M). Column block k is an orthonormal basis
// selection from the null space of the two non-member downlinks stacked, so
// each destination receives only its two member blocks.
CMatrix build_bc_precoder(const ChannelSet& channels,
                          const StreamAllocation& alloc);

// The full transmission scheme for one channel realization.
struct GsaScheme {
  StreamAllocation alloc;
  CMatrix relay_combiner;                   // A, 2M x N
  std::array<CMatrix, 4> source_precoders;  // V_i, M x M
  CMatrix bc_precoder;                      // U, N x 2M
  AlignmentPattern pattern;                 // P, 2M x 4M
  double per_stream_power = 1.0;            // P_s, uniform across streams
};

GsaScheme build_gsa_scheme(const ChannelSet& channels,
                           double per_stream_power = 1.0);

// H = [H_1 H_2 H_3 H_4], the N x 4M horizontal stack of the uplinks.
CMatrix stacked_uplink(const ChannelSet& channels);

// The 4M x 4M block diagonal of the four source precoders.
CMatrix block_diagonal(const std::array<CMatrix, 4>& blocks);

}  // namespace gsax
