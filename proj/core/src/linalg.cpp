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

#include "gsax/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace gsax {

namespace {

// Rotates each column so its first entry of non-negligible magnitude is real
// positive. Unit phase factors preserve orthonormality.
void fix_column_phases(CMatrix& basis) {
  constexpr double kEntryFloor = 1e-12;
  for (Eigen::Index c = 0; c < basis.cols(); ++c) {
    for (Eigen::Index r = 0; r < basis.rows(); ++r) {
      const std::complex<double> v = basis(r, c);
      const double mag = std::abs(v);
      if (mag > kEntryFloor) {
        basis.col(c) *= std::conj(v) / mag;
        break;
      }
    }
  }
}

}  // namespace

CMatrix null_space_basis(const CMatrix& m, double tol) {
  if (m.cols() < 1) {
    throw DimensionMismatch("null_space_basis: input has no columns");
  }
  if (tol < 0.0) {
    throw std::invalid_argument("null_space_basis: tol must be >= 0");
  }

  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;

  const double rel =
      tol > 0.0 ? tol
                : static_cast<double>(std::max(m.rows(), m.cols())) *
                      std::numeric_limits<double>::epsilon();
  const double threshold = rel * sigma_max;

  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold) {
      ++rank;
    }
  }

  const Eigen::Index k = m.cols() - rank;
  CMatrix basis = svd.matrixV().rightCols(k);
  fix_column_phases(basis);
  return basis;
}

CMatrix invert(const CMatrix& m, InvertDiagnostics* diagnostics) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("invert: matrix is not square (" +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ")");
  }
  Eigen::FullPivLU<CMatrix> lu(m);
  if (diagnostics != nullptr) {
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    const double pmax = pivots.maxCoeff();
    diagnostics->rcond_estimate = pmax > 0.0 ? pivots.minCoeff() / pmax : 0.0;
    diagnostics->rank = lu.rank();
  }
  if (!lu.isInvertible()) {
    throw SingularMatrix("invert: numerical rank " +
                         std::to_string(lu.rank()) + " < dimension " +
                         std::to_string(m.rows()));
  }
  return lu.inverse();
}

CMatrix stack_rows(const std::vector<CMatrix>& blocks) {
  if (blocks.empty()) {
    throw DimensionMismatch("stack_rows: no blocks");
  }
  const Eigen::Index cols = blocks.front().cols();
  Eigen::Index rows = 0;
  for (const CMatrix& b : blocks) {
    if (b.cols() != cols) {
      throw DimensionMismatch("stack_rows: column count mismatch");
    }
    rows += b.rows();
  }
  CMatrix out(rows, cols);
  Eigen::Index r = 0;
  for (const CMatrix& b : blocks) {
    out.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return out;
}

CMatrix stack_cols(const std::vector<CMatrix>& blocks) {
  if (blocks.empty()) {
    throw DimensionMismatch("stack_cols: no blocks");
  }
  const Eigen::Index rows = blocks.front().rows();
  Eigen::Index cols = 0;
  for (const CMatrix& b : blocks) {
    if (b.rows() != rows) {
      throw DimensionMismatch("stack_cols: row count mismatch");
    }
    cols += b.cols();
  }
  CMatrix out(rows, cols);
  Eigen::Index c = 0;
  for (const CMatrix& b : blocks) {
    out.middleCols(c, b.cols()) = b;
    c += b.cols();
  }
  return out;
}

CMatrix hermitian(const CMatrix& m) { return m.adjoint(); }

double frobenius_norm(const CMatrix& m) { return m.norm(); }

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: inner dimensions " +
                            std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()) + " differ");
  }
  return a * b;
}

double log_det_hermitian_pd(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("log_det_hermitian_pd: matrix is not square");
  }
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::LLT<CMatrix> llt(sym);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("log_det_hermitian_pd: factorization failed");
  }
  double log2_det = 0.0;
  const CMatrix& lower = llt.matrixLLT();
  for (Eigen::Index i = 0; i < lower.rows(); ++i) {
    const double pivot = lower(i, i).real();
    if (!(pivot > 0.0)) {
      throw NotPositiveDefinite("log_det_hermitian_pd: pivot " +
                                std::to_string(pivot) + " <= 0");
    }
    log2_det += 2.0 * std::log2(pivot);
  }
  return log2_det;
}

}  // namespace gsax
