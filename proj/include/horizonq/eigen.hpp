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

#include <vector>

#include "horizonq/dense_matrix.hpp"

namespace horizonq {

/// Tolerances of the numeric kernel. Defaults are the contract values; a
/// caller may override them per invocation.
struct KernelTolerances {
  /// Maximum allowed deviation from A = A^dagger on input.
  double hermiticity = 1e-10;
  /// Relative off-diagonal stopping threshold of the Jacobi iteration,
  /// multiplied by the max norm of the input.
  double jacobi_offdiag = 1e-14;
  /// Hard cap on Jacobi sweeps before declaring non-convergence.
  int max_sweeps = 100;
  /// Eigenvalues in [psd_floor, 0) are treated as zero by psd_sqrt; anything
  /// below psd_floor is an error.
  double psd_floor = -1e-10;
};

/// Spectral decomposition of a Hermitian matrix. Eigenvalues are sorted in
/// descending order; eigenvectors are the matching orthonormal columns.
struct EigenResult {
  std::vector<double> eigenvalues;
  DenseMatrix eigenvectors;
};

/// Diagonalizes a Hermitian matrix with cyclic complex Jacobi rotations.
/// Rotations run until the largest off-diagonal magnitude falls below
/// tol.jacobi_offdiag * max_abs(a) or tol.max_sweeps full sweeps elapse
/// (the latter raises NumericError; it does not occur for n <= 32).
EigenResult hermitian_eig(const DenseMatrix& a,
                          const KernelTolerances& tol = {});

/// Hermitian square root V diag(sqrt(max(lambda_i, 0))) V^dagger of a
/// positive semidefinite matrix. Eigenvalues below tol.psd_floor raise
/// NumericError.
DenseMatrix psd_sqrt(const DenseMatrix& a, const KernelTolerances& tol = {});

}  // namespace horizonq
