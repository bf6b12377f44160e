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

#include <array>

#include "horizonq/qstate.hpp"

namespace horizonq {

/// Spin-flipped two-qubit operator (sigma_y x sigma_y) rho* (sigma_y x
/// sigma_y), in the same basis as rho.
DenseMatrix spin_flip(const DensityOp& rho);

/// The four square-rooted eigenvalues of rho rho~, sorted descending.
struct WoottersSpectrum {
  std::array<double, 4> sqrt_eigs;
};

/// Spectrum of rho rho~ through the Hermitian route: the square-rooted
/// eigenvalues equal the singular values of sqrt(rho~) sqrt(rho) (whose
/// Gram matrix is sqrt(rho) rho~ sqrt(rho)), read off a Hermitian block
/// embedding so small values keep absolute accuracy. No non-Hermitian
/// eigenproblem is ever solved.
WoottersSpectrum wootters_spectrum(const DensityOp& rho,
                                   const KernelTolerances& tol = {});

/// Same spectrum from a Gram factor L with rho = L L^dagger (see
/// reduced_gram_factor): sqrt(lambda_i) are the singular values of
/// L^T (sigma_y x sigma_y) L, formed without any eigensolve of rho. This
/// path stays accurate even when rho is nearly singular at every scale.
WoottersSpectrum wootters_spectrum_from_factor(
    const DenseMatrix& gram_factor, const KernelTolerances& tol = {});

/// Wootters concurrence max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)).
double concurrence(const DensityOp& rho, const KernelTolerances& tol = {});

/// Concurrence evaluated through the Gram-factor spectrum.
double concurrence_from_factor(const DenseMatrix& gram_factor,
                               const KernelTolerances& tol = {});

/// 4 det of the pivot party's reduced state. Equals the squared concurrence
/// between the pivot and the rest for pure states; for the mixed tripartite
/// states produced here it is the adopted surrogate one-tangle.
double one_tangle(const DensityOp& rho3, const QubitLabel& pivot);

/// tau = one_tangle - C^2(pivot, second) - C^2(pivot, third). The residual
/// is reported raw: it may go negative for mixed states and is not clamped.
struct TangleBreakdown {
  double one_tangle;
  double c2_ab;
  double c2_ac;
  double residual;
};

TangleBreakdown residual_tangle(const DensityOp& rho3, const QubitLabel& pivot,
                                const KernelTolerances& tol = {});

/// True when every entry off the diagonal and anti-diagonal is below tol.
bool has_x_structure(const DenseMatrix& m, double tol = 1e-12);

/// Analytic concurrence of an X-structured two-qubit matrix:
/// 2 max(0, |rho_14| - sqrt(rho_22 rho_33), |rho_23| - sqrt(rho_11 rho_44)).
/// Cross-check path only; the Wootters spectrum stays the primary route.
double x_state_concurrence(const DenseMatrix& m);

}  // namespace horizonq
