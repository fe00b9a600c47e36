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

#include "gsax/linalg.hpp"
#include "gsax/rng.hpp"

namespace gsax {

// One Rayleigh-fading realization of the two-way X relay network: four
// uplinks (source -> relay) and four independent downlinks (relay -> source).
// Entries are i.i.d. circularly-symmetric complex Gaussian with E|h|^2 = 1.
// Arrays are indexed 0..3 for source nodes 1..4.
struct ChannelSet {
  int m_antennas = 0;  // per source
  int n_antennas = 0;  // at the relay
  std::array<CMatrix, 4> uplinks;    // each n_antennas x m_antennas
  std::array<CMatrix, 4> downlinks;  // each m_antennas x n_antennas

  const CMatrix& uplink(int source) const { return uplinks[source - 1]; }
  const CMatrix& downlink(int source) const { return downlinks[source - 1]; }
};

// Draws one channel set for the given trial. Deterministic: identical
// (m_antennas, n_antennas, seed) produce bit-identical matrices. Rank-deficient
// draws (measure zero) are resampled up to 8 times, then ChannelDegenerate is
// thrown.
ChannelSet sample_channel_set(int m_antennas, int n_antennas, TrialSeed seed);

// Same, but drawing from an already-positioned stream. Consumes the stream;
// repeated calls yield fresh independent sets.
ChannelSet sample_channel_set(int m_antennas, int n_antennas,
                              NormalStream& stream);

}  // namespace gsax
