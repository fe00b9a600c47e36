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

#include "gsax/gsa.hpp"

#include <string>

#include "gsax/errors.hpp"

namespace gsax {

int StreamAllocation::relay_streams() const {
  return pair_streams[0] + pair_streams[1] + pair_streams[2] + pair_streams[3];
}

int StreamAllocation::total_streams() const { return 2 * relay_streams(); }

namespace {

// Maps an ordered pair with one endpoint in {1,2} and one in {3,4} to its
// pair index.
int pair_index(int from, int to) {
  const int left = from <= 2 ? from : to;
  const int right = from <= 2 ? to : from;
  if (left == 1 && right == 3) return 0;
  if (left == 1 && right == 4) return 1;
  if (left == 2 && right == 3) return 2;
  if (left == 2 && right == 4) return 3;
  throw std::invalid_argument("pair_index: invalid source pair (" +
                              std::to_string(from) + "," +
                              std::to_string(to) + ")");
}

}  // namespace

int StreamAllocation::streams(int from, int to) const {
  return pair_streams[pair_index(from, to)];
}

int StreamAllocation::pair_row_offset(int pair) const {
  int offset = 0;
  for (int k = 0; k < pair; ++k) {
    offset += pair_streams[k];
  }
  return offset;
}

int StreamAllocation::source_col_offset(int source) const {
  return (source - 1) * m_antennas;
}

int StreamAllocation::stream_col_offset(int from, int to) const {
  int offset = source_col_offset(from);
  // Within a source the two outgoing blocks are partner-ascending; the second
  // block starts after the first partner's stream count.
  const int first_partner = from <= 2 ? 3 : 1;
  if (to != first_partner) {
    offset += streams(from, first_partner);
  }
  return offset;
}

std::array<int, 2> StreamAllocation::member_pairs(int source) {
  switch (source) {
    case 1: return {0, 1};
    case 2: return {2, 3};
    case 3: return {0, 2};
    case 4: return {1, 3};
    default:
      throw std::invalid_argument("member_pairs: source must be in 1..4");
  }
}

std::array<int, 2> StreamAllocation::excluded_sources(int pair) {
  // A pair's processing must null the other source on each side of the
  // network: pair (i,j) excludes {1,2}\{i} and {3,4}\{j}.
  switch (pair) {
    case 0: return {2, 4};  // (1,3)
    case 1: return {2, 3};  // (1,4)
    case 2: return {1, 4};  // (2,3)
    case 3: return {1, 3};  // (2,4)
    default:
      throw std::invalid_argument("excluded_sources: pair must be in 0..3");
  }
}

StreamAllocation allocate_streams(int m_antennas) {
  if (m_antennas < 1) {
    throw std::invalid_argument("allocate_streams: M must be >= 1");
  }
  StreamAllocation alloc;
  alloc.m_antennas = m_antennas;
  if (m_antennas % 2 == 0) {
    alloc.pair_streams = {m_antennas / 2, m_antennas / 2, m_antennas / 2,
                          m_antennas / 2};
  } else {
    const int high = (m_antennas + 1) / 2;
    const int low = (m_antennas - 1) / 2;
    alloc.pair_streams = {high, low, low, high};
  }
  return alloc;
}

bool sa_feasible(int m_antennas, int n_antennas) {
  return n_antennas < 2 * m_antennas;
}

bool gsa_feasible(int m_antennas, int n_antennas) {
  if (m_antennas % 2 == 0) {
    return m_antennas <= (2 * n_antennas) / 5;
  }
  return m_antennas <= (2 * n_antennas - 1) / 5;
}

int min_relay_antennas(int m_antennas) {
  // Invert the feasibility threshold: 2N >= 5M (even M), 2N >= 5M + 1 (odd).
  if (m_antennas % 2 == 0) {
    return (5 * m_antennas + 1) / 2;
  }
  return (5 * m_antennas + 1 + 1) / 2;
}

int dof_upper_bound(int m_antennas, int n_antennas) {
  return 2 * std::min(2 * m_antennas, n_antennas);
}

AlignmentPattern expected_pattern(const StreamAllocation& alloc) {
  const int rows = alloc.relay_streams();
  const int cols = alloc.total_streams();
  CMatrix pattern = CMatrix::Zero(rows, cols);
  for (int k = 0; k < 4; ++k) {
    const auto [i, j] = StreamAllocation::kPairOrder[k];
    const int height = alloc.pair_height(k);
    const int row = alloc.pair_row_offset(k);
    pattern.block(row, alloc.stream_col_offset(i, j), height, height) =
        CMatrix::Identity(height, height);
    pattern.block(row, alloc.stream_col_offset(j, i), height, height) =
        CMatrix::Identity(height, height);
  }
  return AlignmentPattern{std::move(pattern)};
}

CMatrix build_relay_combiner(const ChannelSet& channels,
                             const StreamAllocation& alloc) {
  const int m = channels.m_antennas;
  const int n = channels.n_antennas;
  CMatrix combiner(alloc.relay_streams(), n);
  for (int k = 0; k < 4; ++k) {
    const int height = alloc.pair_height(k);
    const auto excluded = StreamAllocation::excluded_sources(k);
    const CMatrix stacked =
        stack_rows({channels.uplink(excluded[0]).transpose(),
                    channels.uplink(excluded[1]).transpose()});
    const CMatrix basis = null_space_basis(stacked);
    if (basis.cols() < height) {
      throw InsufficientNullSpace(
          "build_relay_combiner: pair block needs " + std::to_string(height) +
          " rows but the null space has dimension " +
          std::to_string(basis.cols()) + " (M=" + std::to_string(m) +
          ", N=" + std::to_string(n) + ")");
    }
    combiner.middleRows(alloc.pair_row_offset(k), height) =
        basis.leftCols(height).transpose();
  }
  return combiner;
}

std::array<CMatrix, 4> build_source_precoders(const CMatrix& relay_combiner,
                                              const ChannelSet& channels,
                                              const StreamAllocation& alloc) {
  const int m = channels.m_antennas;
  std::array<CMatrix, 4> precoders;
  for (int source = 1; source <= 4; ++source) {
    const auto pairs = StreamAllocation::member_pairs(source);
    const CMatrix& uplink = channels.uplink(source);
    // C_i stacks the surviving rows of A*H_i, first member pair on top.
    CMatrix effective(m, m);
    int row = 0;
    for (const int k : pairs) {
      const int height = alloc.pair_height(k);
      effective.middleRows(row, height) =
          relay_combiner.middleRows(alloc.pair_row_offset(k), height) * uplink;
      row += height;
    }
    try {
      precoders[source - 1] = invert(effective);
    } catch (const SingularMatrix&) {
      throw SingularEffectiveChannel(
          "build_source_precoders: effective channel for source " +
          std::to_string(source) + " is singular");
    }
  }
  return precoders;
}

CMatrix build_bc_precoder(const ChannelSet& channels,
                          const StreamAllocation& alloc) {
  const int n = channels.n_antennas;
  CMatrix precoder(n, alloc.relay_streams());
  int col = 0;
  for (int k = 0; k < 4; ++k) {
    const int width = alloc.pair_height(k);
    const auto excluded = StreamAllocation::excluded_sources(k);
    const CMatrix stacked = stack_rows(
        {channels.downlink(excluded[0]), channels.downlink(excluded[1])});
    const CMatrix basis = null_space_basis(stacked);
    if (basis.cols() < width) {
      throw InsufficientNullSpace(
          "build_bc_precoder: pair block needs " + std::to_string(width) +
          " columns but the null space has dimension " +
          std::to_string(basis.cols()) + " (M=" +
          std::to_string(channels.m_antennas) + ", N=" + std::to_string(n) +
          ")");
    }
    precoder.middleCols(col, width) = basis.leftCols(width);
    col += width;
  }
  return precoder;
}

GsaScheme build_gsa_scheme(const ChannelSet& channels,
                           double per_stream_power) {
  GsaScheme scheme;
  scheme.alloc = allocate_streams(channels.m_antennas);
  scheme.relay_combiner = build_relay_combiner(channels, scheme.alloc);
  scheme.source_precoders =
      build_source_precoders(scheme.relay_combiner, channels, scheme.alloc);
  scheme.bc_precoder = build_bc_precoder(channels, scheme.alloc);
  scheme.pattern = expected_pattern(scheme.alloc);
  scheme.per_stream_power = per_stream_power;
  return scheme;
}

CMatrix stacked_uplink(const ChannelSet& channels) {
  return stack_cols({channels.uplinks[0], channels.uplinks[1],
                     channels.uplinks[2], channels.uplinks[3]});
}

CMatrix block_diagonal(const std::array<CMatrix, 4>& blocks) {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  for (const CMatrix& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  CMatrix out = CMatrix::Zero(rows, cols);
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  for (const CMatrix& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

}  // namespace gsax
