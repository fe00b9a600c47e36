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

#include "gsax/channel.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gsax/errors.hpp"

namespace gsax {

namespace {

constexpr int kMaxResampleAttempts = 8;

CMatrix draw_matrix(Eigen::Index rows, Eigen::Index cols,
                    NormalStream& stream) {
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = stream.next_complex_normal();
    }
  }
  return m;
}

bool full_rank(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  const Eigen::VectorXd& sigma = svd.singularValues();
  if (sigma.size() == 0) {
    return false;
  }
  const double threshold = static_cast<double>(std::max(m.rows(), m.cols())) *
                           std::numeric_limits<double>::epsilon() * sigma(0);
  return sigma(sigma.size() - 1) > threshold;
}

}  // namespace

ChannelSet sample_channel_set(int m_antennas, int n_antennas,
                              NormalStream& stream) {
  if (m_antennas < 1 || n_antennas < 1) {
    throw std::invalid_argument("sample_channel_set: antenna counts must be >= 1");
  }
  for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
    ChannelSet set;
    set.m_antennas = m_antennas;
    set.n_antennas = n_antennas;
    for (int i = 0; i < 4; ++i) {
      set.uplinks[i] = draw_matrix(n_antennas, m_antennas, stream);
    }
    for (int i = 0; i < 4; ++i) {
      set.downlinks[i] = draw_matrix(m_antennas, n_antennas, stream);
    }
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      ok = full_rank(set.uplinks[i]) && full_rank(set.downlinks[i]);
    }
    if (ok) {
      return set;
    }
  }
  throw ChannelDegenerate("sample_channel_set: rank-deficient draws after " +
                          std::to_string(kMaxResampleAttempts) + " attempts");
}

ChannelSet sample_channel_set(int m_antennas, int n_antennas, TrialSeed seed) {
  NormalStream stream(seed, StreamDomain::kChannel);
  return sample_channel_set(m_antennas, n_antennas, stream);
}

}  // namespace gsax
