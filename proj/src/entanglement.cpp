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

#include "horizonq/entanglement.hpp"

#include <algorithm>
#include <cmath>

namespace horizonq {

namespace {

// Density eigenvalues below this fraction of the largest one are rounding
// residue of a rank-deficient operator; the square root treats them as
// exact zeros so the null space stays clean.
constexpr double kSqrtRankFloor = 1e-12;

void require_two_qubits(const DensityOp& rho, const char* op) {
  if (rho.n_qubits() != 2) {
    throw ShapeError(std::string(op) + " expects a two-qubit operator");
  }
}

// Hermitian square root with the rank floor above. Only the Wootters path
// uses this variant; the general psd_sqrt keeps every tolerated eigenvalue.
DenseMatrix rank_revealing_sqrt(const DenseMatrix& rho,
                                const KernelTolerances& tol) {
  const EigenResult eig = hermitian_eig(rho, tol);
  const std::size_t n = rho.rows();
  const double top = std::max(eig.eigenvalues.front(), 0.0);
  std::vector<double> roots(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lambda = eig.eigenvalues[k];
    if (lambda < tol.psd_floor) {
      throw NumericError("wootters_spectrum: state is not positive");
    }
    if (lambda < kSqrtRankFloor * top) lambda = 0.0;
    roots[k] = std::sqrt(lambda);
  }
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      complexd sum{};
      for (std::size_t k = 0; k < n; ++k)
        sum += eig.eigenvectors(i, k) * roots[k] *
               std::conj(eig.eigenvectors(j, k));
      out(i, j) = sum;
      out(j, i) = std::conj(sum);
    }
    out(i, i) = out(i, i).real();
  }
  return out;
}

}  // namespace

DenseMatrix spin_flip(const DensityOp& rho) {
  require_two_qubits(rho, "spin_flip");
  const DenseMatrix yy = kron(pauli_y(), pauli_y());
  return yy * conjugate(rho.matrix()) * yy;
}

WoottersSpectrum wootters_spectrum(const DensityOp& rho,
                                   const KernelTolerances& tol) {
  require_two_qubits(rho, "wootters_spectrum");
  // sqrt(lambda_i) of rho rho~ are the singular values of
  // a = sqrt(rho~) sqrt(rho), since a^dagger a = sqrt(rho) rho~ sqrt(rho).
  // Reading them off the Hermitian embedding [[0, a], [a^dagger, 0]] keeps
  // absolute (not square-rooted) accuracy for the small values.
  const DenseMatrix root = rank_revealing_sqrt(rho.matrix(), tol);
  const DenseMatrix yy = kron(pauli_y(), pauli_y());
  const DenseMatrix root_flipped = yy * conjugate(root) * yy;  // sqrt(rho~)
  const DenseMatrix a = root_flipped * root;

  DenseMatrix h(8, 8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      h(i, j + 4) = a(i, j);
      h(j + 4, i) = std::conj(a(i, j));
    }
  const EigenResult eig = hermitian_eig(h, tol);  // spectrum {+/- sigma_i}

  WoottersSpectrum spec{};
  for (std::size_t i = 0; i < 4; ++i) {
    spec.sqrt_eigs[i] = std::max(eig.eigenvalues[i], 0.0);
  }
  std::sort(spec.sqrt_eigs.begin(), spec.sqrt_eigs.end(),
            std::greater<double>());
  return spec;
}

WoottersSpectrum wootters_spectrum_from_factor(const DenseMatrix& gram_factor,
                                               const KernelTolerances& tol) {
  if (gram_factor.rows() != 4) {
    throw ShapeError(
        "wootters_spectrum_from_factor expects a two-qubit factor");
  }
  // tau = L^T (sigma_y x sigma_y) L is complex symmetric with the same
  // nonzero singular values as sqrt(rho~) sqrt(rho).
  const std::size_t m = gram_factor.cols();
  const DenseMatrix yy = kron(pauli_y(), pauli_y());
  DenseMatrix transposed(m, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t e = 0; e < m; ++e) transposed(e, i) = gram_factor(i, e);
  const DenseMatrix tau = transposed * yy * gram_factor;

  DenseMatrix h(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      h(i, j + m) = tau(i, j);
      h(j + m, i) = std::conj(tau(i, j));
    }
  const EigenResult eig = hermitian_eig(h, tol);

  WoottersSpectrum spec{};
  for (std::size_t i = 0; i < 4; ++i) {
    spec.sqrt_eigs[i] =
        i < m ? std::max(eig.eigenvalues[i], 0.0) : 0.0;
  }
  std::sort(spec.sqrt_eigs.begin(), spec.sqrt_eigs.end(),
            std::greater<double>());
  return spec;
}

double concurrence(const DensityOp& rho, const KernelTolerances& tol) {
  const auto s = wootters_spectrum(rho, tol).sqrt_eigs;
  return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

double concurrence_from_factor(const DenseMatrix& gram_factor,
                               const KernelTolerances& tol) {
  const auto s = wootters_spectrum_from_factor(gram_factor, tol).sqrt_eigs;
  return std::max(0.0, s[0] - s[1] - s[2] - s[3]);
}

double one_tangle(const DensityOp& rho3, const QubitLabel& pivot) {
  if (rho3.n_qubits() != 3) {
    throw ShapeError("one_tangle expects a three-qubit operator");
  }
  const DensityOp reduced = partial_trace(rho3, {pivot});
  const auto& m = reduced.matrix();
  const complexd det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return std::clamp(4.0 * det.real(), 0.0, 1.0);
}

TangleBreakdown residual_tangle(const DensityOp& rho3, const QubitLabel& pivot,
                                const KernelTolerances& tol) {
  if (rho3.n_qubits() != 3) {
    throw ShapeError("residual_tangle expects a three-qubit operator");
  }
  std::vector<QubitLabel> others;
  for (const auto& q : rho3.labels())
    if (q != pivot) others.push_back(q);
  if (others.size() != 2) {
    throw LabelError("pivot '" + pivot.name + "' is not in the register");
  }

  TangleBreakdown out{};
  out.one_tangle = one_tangle(rho3, pivot);
  const double c_ab = concurrence(partial_trace(rho3, {pivot, others[0]}), tol);
  const double c_ac = concurrence(partial_trace(rho3, {pivot, others[1]}), tol);
  out.c2_ab = c_ab * c_ab;
  out.c2_ac = c_ac * c_ac;
  out.residual = out.one_tangle - out.c2_ab - out.c2_ac;
  return out;
}

bool has_x_structure(const DenseMatrix& m, double tol) {
  if (m.rows() != 4 || m.cols() != 4) return false;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(m(i, j)) > tol) return false;
    }
  return true;
}

double x_state_concurrence(const DenseMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw ShapeError("x_state_concurrence expects a 4x4 matrix");
  }
  const double outer =
      std::abs(m(0, 3)) - std::sqrt(std::max(0.0, m(1, 1).real() * m(2, 2).real()));
  const double inner =
      std::abs(m(1, 2)) - std::sqrt(std::max(0.0, m(0, 0).real() * m(3, 3).real()));
  return 2.0 * std::max({0.0, outer, inner});
}

}  // namespace horizonq
