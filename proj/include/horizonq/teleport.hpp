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
#include <cstdint>

#include "horizonq/qstate.hpp"

namespace horizonq {

/// 3x3 real matrix of Pauli correlations t[n][m] = Tr(rho sigma_n x sigma_m)
/// for n, m in {x, y, z}. Every entry lies in [-1, 1].
struct CorrelationMatrix {
  std::array<std::array<double, 3>, 3> t;
};

CorrelationMatrix correlation_matrix(const DensityOp& rho);

/// Sum of the singular values of t, computed from the eigenvalues of t^T t.
double n_value(const CorrelationMatrix& t, const KernelTolerances& tol = {});

/// Optimal teleportation fidelity f = (1 + N/3)/2 with its ingredients.
/// The state is useful as a channel exactly when N > 1 (equivalently
/// f > 2/3).
struct FidelityRecord {
  double n_value = 0.0;
  double fidelity = 0.0;
  bool useful = false;
  std::array<double, 3> u{};  // eigenvalues of t^T t, descending
};

FidelityRecord teleportation_fidelity(const DensityOp& rho,
                                      const KernelTolerances& tol = {});

/// Fully entangled fraction, max over maximally entangled |phi> of
/// <phi|rho|phi>, estimated by sampling |phi_U> = (I x U)|Phi+> over `budget`
/// Haar-random single-qubit unitaries followed by coordinate descent on the
/// ZYZ angles of the best candidate (200 passes, step halving, ties keep the
/// incumbent). Deterministic for a fixed seed. Validates
/// teleportation_fidelity through f = (2F + 1)/3.
double fully_entangled_fraction(const DensityOp& rho, std::size_t budget,
                                std::uint64_t seed);

}  // namespace horizonq
