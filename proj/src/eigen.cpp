// Copyright 2026 The horizonq developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "horizonq/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace horizonq {

namespace {

double max_offdiag(const DenseMatrix& m) {
  double off = 0.0;
  for (std::size_t p = 0; p < m.rows(); ++p)
    for (std::size_t q = p + 1; q < m.cols(); ++q)
      off = std::max(off, std::abs(m(p, q)));
  return off;
}

// One complex Jacobi rotation zeroing m(p, q), accumulating the unitary in v.
// The rotation is G with block [[c, s*w], [-s*conj(w), c]] where w is the
// phase of m(p, q); m <- G^dagger m G, v <- v G.
void rotate(DenseMatrix& m, DenseMatrix& v, std::size_t p, std::size_t q) {
  const complexd apq = m(p, q);
  const double absa = std::abs(apq);
  if (absa == 0.0) return;
  const complexd w = apq / absa;
  const double app = m(p, p).real();
  const double aqq = m(q, q).real();
  const double tau = (aqq - app) / (2.0 * absa);
  const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const complexd mkp = m(k, p);
    const complexd mkq = m(k, q);
    m(k, p) = c * mkp - s * std::conj(w) * mkq;
    m(k, q) = s * w * mkp + c * mkq;
    m(p, k) = std::conj(m(k, p));
    m(q, k) = std::conj(m(k, q));
  }
  m(p, p) = app * c * c - 2.0 * c * s * absa + aqq * s * s;
  m(q, q) = app * s * s + 2.0 * c * s * absa + aqq * c * c;
  m(p, q) = 0.0;
  m(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const complexd vkp = v(k, p);
    const complexd vkq = v(k, q);
    v(k, p) = c * vkp - s * std::conj(w) * vkq;
    v(k, q) = s * w * vkp + c * vkq;
  }
}

}  // namespace

EigenResult hermitian_eig(const DenseMatrix& a, const KernelTolerances& tol) {
  if (!a.is_square()) throw ShapeError("hermitian_eig: matrix is not square");
  if (max_abs_diff(a, dagger(a)) > tol.hermiticity) {
    throw ContractError("hermitian_eig: matrix is not Hermitian");
  }
  const std::size_t n = a.rows();
  const double stop = tol.jacobi_offdiag * max_abs(a);

  // Symmetrize exactly so rounding in the input cannot bias the iteration.
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  DenseMatrix v = DenseMatrix::identity(n);

  bool converged = max_offdiag(m) <= stop;
  for (int sweep = 0; sweep < tol.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(m(p, q)) > stop) rotate(m, v, p, q);
    converged = max_offdiag(m) <= stop;
  }
  if (!converged) {
    throw NumericError("hermitian_eig: Jacobi iteration did not converge");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return m(i, i).real() > m(j, j).real();
  });

  EigenResult result;
  result.eigenvalues.resize(n);
  result.eigenvectors = DenseMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    result.eigenvalues[col] = m(order[col], order[col]).real();
    for (std::size_t row = 0; row < n; ++row) {
      result.eigenvectors(row, col) = v(row, order[col]);
    }
  }
  return result;
}

DenseMatrix psd_sqrt(const DenseMatrix& a, const KernelTolerances& tol) {
  const EigenResult eig = hermitian_eig(a, tol);
  const std::size_t n = a.rows();
  for (double lambda : eig.eigenvalues) {
    if (lambda < tol.psd_floor) {
      throw NumericError("psd_sqrt: matrix is not positive semidefinite");
    }
  }
  // V diag(sqrt(lambda)) V^dagger, clamping the tolerated negatives to zero.
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      complexd sum{};
      for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
        sum += eig.eigenvectors(i, k) * root * std::conj(eig.eigenvectors(j, k));
      }
      out(i, j) = sum;
      out(j, i) = std::conj(sum);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

}  // namespace horizonq
