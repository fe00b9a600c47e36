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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gsax/errors.hpp"

namespace gsax {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct InvertDiagnostics {
  // min/max |pivot| ratio from the LU factorization; a cheap conditioning
  // indicator, not a true reciprocal condition number.
  double rcond_estimate = 0.0;
  Eigen::Index rank = 0;
};

/// Orthonormal basis of the right null space {x : m*x = 0}, returned as the
/// columns of a cols(m) x k matrix with k = cols(m) - numerical_rank(m).
///
/// tol is a relative singular-value threshold; tol = 0 selects the default
/// max(rows, cols) * machine_epsilon. Basis columns are deterministic: each
/// is phase-rotated so its first nonzero entry is real and positive, making
/// downstream constructions reproducible across runs.
CMatrix null_space_basis(const CMatrix& m, double tol = 0.0);

/// Inverse of a square matrix via full-pivot LU.
/// Throws SingularMatrix when the numerical rank is below the dimension.
CMatrix invert(const CMatrix& m, InvertDiagnostics* diagnostics = nullptr);

/// Vertical concatenation of blocks sharing a column count.
CMatrix stack_rows(const std::vector<CMatrix>& blocks);

/// Horizontal concatenation of blocks sharing a row count.
CMatrix stack_cols(const std::vector<CMatrix>& blocks);

/// Conjugate transpose.
CMatrix hermitian(const CMatrix& m);

double frobenius_norm(const CMatrix& m);

/// Product a*b with an explicit shape check (DimensionMismatch on failure).
CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// log2 det(m) for Hermitian positive definite m, computed as a sum of log
/// Cholesky pivots. The input is symmetrized as (m + m^H)/2 before
/// factorization. Throws NotPositiveDefinite when any pivot is <= 0.
double log_det_hermitian_pd(const CMatrix& m);

}  // namespace gsax
