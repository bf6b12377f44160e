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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "horizonq/errors.hpp"

namespace horizonq {

using complexd = std::complex<double>;

/// Dense row-major complex matrix. The toolkit only ever handles operators up
/// to 32x32 (five qubits), so everything is plain contiguous storage and
/// O(n^3) textbook arithmetic. Constructors reject non-finite entries.
class DenseMatrix {
 public:
  DenseMatrix() = default;

  /// Zero matrix of the given shape.
  DenseMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of `entries` (row-major, length rows*cols); every
  /// component must be finite.
  DenseMatrix(std::size_t rows, std::size_t cols,
              std::vector<complexd> entries);

  static DenseMatrix identity(std::size_t n);

  /// Convenience builder for small literal matrices in tests and templates.
  static DenseMatrix from_rows(
      std::initializer_list<std::initializer_list<complexd>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  complexd& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const complexd& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<complexd>& entries() const { return entries_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complexd> entries_;
};

/// Textbook product; shapes must be compatible.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  return matmul(a, b);
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(complexd scalar, const DenseMatrix& m);

/// Kronecker product in block layout a[i][j] * b.
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

/// Conjugate transpose.
DenseMatrix dagger(const DenseMatrix& a);

/// Entrywise complex conjugate.
DenseMatrix conjugate(const DenseMatrix& a);

/// Sum of the diagonal; the matrix must be square.
complexd trace(const DenseMatrix& a);

/// Largest entry magnitude (the max norm used by all tolerance checks).
double max_abs(const DenseMatrix& a);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

bool is_hermitian(const DenseMatrix& a, double tol);

// Pauli operators and the single-qubit identity, in the {|0>, |1>} basis.
DenseMatrix pauli_x();
DenseMatrix pauli_y();
DenseMatrix pauli_z();

}  // namespace horizonq
