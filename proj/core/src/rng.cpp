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

#include "gsax/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gsax {

namespace {

constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMult1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mul_hi(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) >> 64);
}

inline Philox4x64::Block round_once(const Philox4x64::Block& ctr,
                                    const Philox4x64::Key& key) {
  const std::uint64_t hi0 = mul_hi(kMult0, ctr[0]);
  const std::uint64_t lo0 = kMult0 * ctr[0];
  const std::uint64_t hi1 = mul_hi(kMult1, ctr[2]);
  const std::uint64_t lo1 = kMult1 * ctr[2];
  return {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
}

// Converts a 64-bit word to a double in (0, 1] using the top 53 bits.
inline double to_unit_interval(std::uint64_t x) {
  return static_cast<double>((x >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

Philox4x64::Block Philox4x64::generate(Block counter, Key key) {
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    counter = round_once(counter, key);
  }
  return counter;
}

StreamDomain node_noise_domain(int node) {
  if (node < 1 || node > 4) {
    throw std::invalid_argument("node_noise_domain: node must be in 1..4");
  }
  return static_cast<StreamDomain>(
      static_cast<std::uint64_t>(StreamDomain::kNodeNoise1) + node - 1);
}

NormalStream::NormalStream(TrialSeed seed, StreamDomain domain)
    : key_{seed.master_seed, seed.trial_index},
      counter_{0, 0, 0, static_cast<std::uint64_t>(domain)} {}

void NormalStream::refill() {
  buffer_ = Philox4x64::generate(counter_, key_);
  buffer_pos_ = 0;
  // 2^64 blocks per stream; the carry path is unreachable in practice but
  // kept well-defined.
  if (++counter_[0] == 0 && ++counter_[1] == 0) {
    ++counter_[2];
  }
}

std::uint64_t NormalStream::next_u64() {
  if (buffer_pos_ >= 4) {
    refill();
  }
  return buffer_[buffer_pos_++];
}

double NormalStream::next_uniform() { return to_unit_interval(next_u64()); }

double NormalStream::next_normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_normal_ = radius * std::sin(angle);
  has_cached_normal_ = true;
  return radius * std::cos(angle);
}

std::complex<double> NormalStream::next_complex_normal() {
  const double re = next_normal();
  const double im = next_normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

}  // namespace gsax
