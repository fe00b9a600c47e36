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

#include <stdexcept>
#include <string>

namespace gsax {

// Base class for all gsax failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incompatible matrix/vector shapes.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Numerical rank below full dimension where an inverse is required.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// Cholesky pivot <= 0 in a log-det of a supposedly PD matrix.
class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

// A channel draw stayed rank-deficient after the bounded resample budget.
class ChannelDegenerate : public Error {
 public:
  using Error::Error;
};

// The null space of the excluded-channel stack is too small for the
// requested number of combiner/beamformer rows.
class InsufficientNullSpace : public Error {
 public:
  using Error::Error;
};

// An effective channel block C_i or G~_i is numerically singular.
// Measure-zero for continuous fading; callers resample the channel.
class SingularEffectiveChannel : public Error {
 public:
  using Error::Error;
};

// Requested antenna configuration does not admit the alignment scheme.
class Infeasible : public Error {
 public:
  using Error::Error;
};

// Too few sweep points inside the requested slope-estimation window.
class InsufficientPoints : public Error {
 public:
  using Error::Error;
};

}  // namespace gsax
