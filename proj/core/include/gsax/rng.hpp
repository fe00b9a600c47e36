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
#include <complex>
#include <cstdint>

namespace gsax {

// Identifies one Monte Carlo trial. The (master_seed, trial_index) pair keys
// an independent random stream, so trials can run in any order, on any number
// of threads, and still reproduce bit-identical draws.
struct TrialSeed {
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;
};

// Philox4x64-10 counter-based block cipher (Random123 constants).
// Stateless: output is a pure function of (counter, key).
struct Philox4x64 {
  using Block = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  static Block generate(Block counter, Key key);
};

// Disjoint substreams of one trial. The domain tag occupies the top counter
// word, so streams for different purposes never overlap.
enum class StreamDomain : std::uint64_t {
  kChannel = 0,
  kRelayNoise = 1,
  kNodeNoise1 = 2,
  kNodeNoise2 = 3,
  kNodeNoise3 = 4,
  kNodeNoise4 = 5,
  kSymbols = 6,
};

StreamDomain node_noise_domain(int node);

// Deterministic stream of uniforms / normals drawn from Philox blocks.
// Normals come from Box-Muller (no rejection), so the mapping from counter
// position to value is fixed and platform-independent.
class NormalStream {
 public:
  NormalStream(TrialSeed seed, StreamDomain domain);

  std::uint64_t next_u64();

  // Uniform on (0, 1].
  double next_uniform();

  // Standard normal N(0, 1).
  double next_normal();

  // Circularly-symmetric complex normal with E|z|^2 = 1.
  std::complex<double> next_complex_normal();

 private:
  void refill();

  Philox4x64::Key key_;
  Philox4x64::Block counter_;
  Philox4x64::Block buffer_{};
  int buffer_pos_ = 4;  // empty
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace gsax
