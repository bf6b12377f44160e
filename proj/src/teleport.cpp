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

#include "horizonq/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace horizonq {

namespace {

constexpr double kImagResidueTol = 1e-10;
constexpr double kEntryRangeTol = 1e-12;

// Uniform double in [0, 1) from the top 53 bits of the engine output; the
// mt19937_64 bit stream is pinned by the standard, so results are portable.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Rz(a) Ry(b) Rz(c) single-qubit unitary (global phase dropped).
std::array<complexd, 4> zyz_unitary(double a, double b, double c) {
  const double cb = std::cos(b / 2.0);
  const double sb = std::sin(b / 2.0);
  const complexd em{std::cos((a + c) / 2.0), -std::sin((a + c) / 2.0)};
  const complexd ed{std::cos((a - c) / 2.0), -std::sin((a - c) / 2.0)};
  return {em * cb, -ed * sb, std::conj(ed) * sb, std::conj(em) * cb};
}

// <phi_U| rho |phi_U> with |phi_U> = (I x U)|Phi+> = (U00, U10, U01, U11)/sqrt2.
double overlap(const DenseMatrix& rho, const std::array<complexd, 4>& u) {
  const std::array<complexd, 4> v = {u[0], u[2], u[1], u[3]};
  complexd sum{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      sum += std::conj(v[i]) * rho(i, j) * v[j];
  return 0.5 * sum.real();
}

}  // namespace

CorrelationMatrix correlation_matrix(const DensityOp& rho) {
  if (rho.n_qubits() != 2) {
    throw ShapeError("correlation_matrix expects a two-qubit operator");
  }
  const std::array<DenseMatrix, 3> paulis = {pauli_x(), pauli_y(), pauli_z()};
  CorrelationMatrix out{};
  for (std::size_t n = 0; n < 3; ++n) {
    for (std::size_t m = 0; m < 3; ++m) {
      const complexd val = trace(rho.matrix() * kron(paulis[n], paulis[m]));
      if (std::abs(val.imag()) > kImagResidueTol) {
        throw NumericError("Pauli correlation has a nonreal trace");
      }
      if (std::abs(val.real()) > 1.0 + kEntryRangeTol) {
        throw NumericError("Pauli correlation out of [-1, 1]");
      }
      out.t[n][m] = val.real();
    }
  }
  return out;
}

double n_value(const CorrelationMatrix& t, const KernelTolerances& tol) {
  // t^T t is a real symmetric 3x3; its eigenvalues are the squared singular
  // values of t.
  DenseMatrix tt(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < 3; ++k) sum += t.t[k][i] * t.t[k][j];
      tt(i, j) = sum;
    }
  const EigenResult eig = hermitian_eig(tt, tol);
  double n = 0.0;
  for (double lambda : eig.eigenvalues) n += std::sqrt(std::max(lambda, 0.0));
  return n;
}

FidelityRecord teleportation_fidelity(const DensityOp& rho,
                                      const KernelTolerances& tol) {
  const CorrelationMatrix t = correlation_matrix(rho);
  DenseMatrix tt(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < 3; ++k) sum += t.t[k][i] * t.t[k][j];
      tt(i, j) = sum;
    }
  const EigenResult eig = hermitian_eig(tt, tol);

  FidelityRecord rec{};
  for (std::size_t i = 0; i < 3; ++i) {
    rec.u[i] = std::max(eig.eigenvalues[i], 0.0);
    rec.n_value += std::sqrt(rec.u[i]);
  }
  rec.fidelity = 0.5 * (1.0 + rec.n_value / 3.0);
  rec.useful = rec.n_value > 1.0;
  return rec;
}

double fully_entangled_fraction(const DensityOp& rho, std::size_t budget,
                                std::uint64_t seed) {
  if (rho.n_qubits() != 2) {
    throw ShapeError("fully_entangled_fraction expects a two-qubit operator");
  }
  if (budget < 1000) {
    throw ContractError("fully_entangled_fraction needs budget >= 1000");
  }
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  std::mt19937_64 rng(seed);
  double best = -1.0;
  std::array<double, 3> best_angles{};
  for (std::size_t i = 0; i < budget; ++i) {
    // Haar measure in ZYZ angles: a, c uniform on [0, 2pi), cos(b) uniform.
    const double a = kTwoPi * uniform01(rng);
    const double b = std::acos(1.0 - 2.0 * uniform01(rng));
    const double c = kTwoPi * uniform01(rng);
    const double f = overlap(rho.matrix(), zyz_unitary(a, b, c));
    if (f > best) {
      best = f;
      best_angles = {a, b, c};
    }
  }

  // Coordinate descent refinement with step halving.
  double step = 0.5;
  for (int pass = 0; pass < 200; ++pass) {
    bool improved = false;
    for (std::size_t k = 0; k < 3; ++k) {
      for (double delta : {step, -step}) {
        auto trial = best_angles;
        trial[k] += delta;
        const double f = overlap(rho.matrix(),
                                 zyz_unitary(trial[0], trial[1], trial[2]));
        if (f > best) {
          best = f;
          best_angles = trial;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace horizonq
