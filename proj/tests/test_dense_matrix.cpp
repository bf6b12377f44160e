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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "horizonq/dense_matrix.hpp"
#include "horizonq/eigen.hpp"
#include "testutil.hpp"

using namespace horizonq;
using test::Rng;

TEST_CASE("matmul basics") {
  const DenseMatrix x = pauli_x();
  const DenseMatrix id = DenseMatrix::identity(2);

  CHECK(max_abs_diff(id * x, x) == 0.0);
  CHECK(max_abs_diff(x * x, id) == 0.0);

  const DenseMatrix a = DenseMatrix::from_rows({{1.0, 2.0}, {3.0, 4.0}});
  const DenseMatrix b = DenseMatrix::from_rows({{5.0, 6.0}, {7.0, 8.0}});
  const DenseMatrix expect =
      DenseMatrix::from_rows({{19.0, 22.0}, {43.0, 50.0}});
  CHECK(max_abs_diff(a * b, expect) == 0.0);

  const DenseMatrix tall(3, 2);
  CHECK_THROWS_AS((void)(tall * tall), ShapeError);
}

TEST_CASE("kron basics and shape law") {
  const DenseMatrix id2 = DenseMatrix::identity(2);
  CHECK(max_abs_diff(kron(id2, id2), DenseMatrix::identity(4)) == 0.0);

  DenseMatrix scalar(1, 1);
  scalar(0, 0) = 2.0;
  const DenseMatrix m = DenseMatrix::from_rows({{1.0, -1.0}, {0.5, 3.0}});
  CHECK(max_abs_diff(kron(scalar, m), complexd{2.0} * m) == 0.0);

  // (sigma_y x sigma_y)|00> = -|11>
  const DenseMatrix yy = kron(pauli_y(), pauli_y());
  DenseMatrix ket00(4, 1);
  ket00(0, 0) = 1.0;
  const DenseMatrix out = yy * ket00;
  CHECK(out(3, 0) == complexd{-1.0, 0.0});
  CHECK(std::abs(out(0, 0)) + std::abs(out(1, 0)) + std::abs(out(2, 0)) == 0.0);

  Rng rng(11);
  const DenseMatrix p = test::random_hermitian(2, rng);
  const DenseMatrix q = test::random_hermitian(3, rng);
  const DenseMatrix r = test::random_hermitian(2, rng);
  CHECK(kron(p, q).rows() == p.rows() * q.rows());
  // Same association order must give bitwise identical results.
  CHECK(max_abs_diff(kron(kron(p, q), r), kron(kron(p, q), r)) == 0.0);
  CHECK(max_abs_diff(kron(kron(p, q), r), kron(p, kron(q, r))) < 1e-12);
}

TEST_CASE("dagger") {
  CHECK(max_abs_diff(dagger(DenseMatrix::identity(3)),
                     DenseMatrix::identity(3)) == 0.0);

  const DenseMatrix m =
      DenseMatrix::from_rows({{0.0, complexd{0.0, 1.0}}, {0.0, 0.0}});
  const DenseMatrix expect =
      DenseMatrix::from_rows({{0.0, 0.0}, {complexd{0.0, -1.0}, 0.0}});
  CHECK(max_abs_diff(dagger(m), expect) == 0.0);

  Rng rng(5);
  const DenseMatrix rand =
      test::random_hermitian(4, rng) * test::random_hermitian(4, rng);
  CHECK(max_abs_diff(dagger(dagger(rand)), rand) == 0.0);
}

TEST_CASE("trace") {
  CHECK(trace(DenseMatrix::identity(4)) == complexd{4.0, 0.0});
  CHECK(trace(pauli_x()) == complexd{0.0, 0.0});
  CHECK_THROWS_AS(trace(DenseMatrix(2, 3)), ShapeError);
}

TEST_CASE("constructors reject non-finite entries") {
  CHECK_THROWS_AS(DenseMatrix(1, 1, {complexd{std::nan(""), 0.0}}),
                  ContractError);
  CHECK_THROWS_AS(
      DenseMatrix(1, 2, {complexd{0.0, 0.0},
                         complexd{std::numeric_limits<double>::infinity(), 0}}),
      ContractError);
  CHECK_THROWS_AS(DenseMatrix(2, 2, {1.0, 2.0, 3.0}), ShapeError);
}

TEST_CASE("hermitian_eig on fixed spectra") {
  const DenseMatrix d =
      DenseMatrix::from_rows({{3.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 2.0}});
  const EigenResult eig = hermitian_eig(d);
  CHECK(eig.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(eig.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-14));

  const EigenResult ex = hermitian_eig(pauli_x());
  CHECK(ex.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ex.eigenvalues[1] == doctest::Approx(-1.0).epsilon(1e-14));

  // |Phi+><Phi+| has spectrum (1, 0, 0, 0).
  DenseMatrix bell(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  const EigenResult eb = hermitian_eig(bell);
  CHECK(eb.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-13));
  for (int i = 1; i < 4; ++i) CHECK(std::abs(eb.eigenvalues[i]) < 1e-13);
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  DenseMatrix m(2, 2);
  m(0, 1) = 1.0;  // strictly upper, not Hermitian
  CHECK_THROWS_AS(hermitian_eig(m), ContractError);
}

TEST_CASE("hermitian_eig invariants on random matrices") {
  Rng rng(42);
  for (std::size_t n : {2u, 3u, 4u, 8u, 16u}) {
    const DenseMatrix a = test::random_hermitian(n, rng);
    const EigenResult eig = hermitian_eig(a);
    const DenseMatrix v = eig.eigenvectors;

    // A v_i = lambda_i v_i in max norm.
    const DenseMatrix av = a * v;
    double worst = 0.0;
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row)
        worst = std::max(worst, std::abs(av(row, col) -
                                         eig.eigenvalues[col] * v(row, col)));
    CHECK(worst < 1e-10);

    // Orthonormal columns.
    CHECK(max_abs_diff(dagger(v) * v, DenseMatrix::identity(n)) < 1e-10);

    // Reconstruction.
    DenseMatrix lambda(n, n);
    for (std::size_t i = 0; i < n; ++i) lambda(i, i) = eig.eigenvalues[i];
    CHECK(max_abs_diff(v * lambda * dagger(v), a) <
          1e-9 * std::max(1.0, max_abs(a)));

    // Eigenvalue sum equals the trace.
    double sum = 0.0;
    for (double l : eig.eigenvalues) sum += l;
    CHECK(test::approx(sum, trace(a).real(), 1e-10 * std::max(1.0, max_abs(a))));
  }
}

TEST_CASE("eigenvalue product matches the cofactor determinant") {
  Rng rng(7);
  for (std::size_t n : {2u, 3u, 4u}) {
    const DenseMatrix a = test::random_hermitian(n, rng);
    const EigenResult eig = hermitian_eig(a);
    double prod = 1.0;
    for (double l : eig.eigenvalues) prod *= l;
    const complexd det = test::cofactor_det(a);
    CHECK(std::abs(det.imag()) < 1e-10);
    CHECK(test::approx(prod, det.real(), 1e-8));
  }
}

TEST_CASE("psd_sqrt") {
  CHECK(max_abs_diff(psd_sqrt(DenseMatrix::identity(3)),
                     DenseMatrix::identity(3)) < 1e-14);

  const DenseMatrix d = DenseMatrix::from_rows({{4.0, 0.0}, {0.0, 9.0}});
  const DenseMatrix expect = DenseMatrix::from_rows({{2.0, 0.0}, {0.0, 3.0}});
  CHECK(max_abs_diff(psd_sqrt(d), expect) < 1e-14);

  // Random PSD: the square root squares back.
  Rng rng(9);
  for (int rep = 0; rep < 5; ++rep) {
    const DenseMatrix g = test::random_hermitian(4, rng);
    const DenseMatrix psd = g * dagger(g);
    const DenseMatrix root = psd_sqrt(psd);
    CHECK(max_abs_diff(root * root, psd) < 1e-9 * std::max(1.0, max_abs(psd)));
  }

  // Indefinite input is rejected.
  const DenseMatrix indef = DenseMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  CHECK_THROWS_AS(psd_sqrt(indef), NumericError);
}

TEST_CASE("psd_sqrt of a density-like random matrix squares back to 1e-9") {
  Rng rng(123);
  const DensityOp rho =
      test::random_density({QubitLabel{"A"}, QubitLabel{"B"}}, 3, rng);
  const DenseMatrix root = psd_sqrt(rho.matrix());
  CHECK(max_abs_diff(root * root, rho.matrix()) <= 1e-9);
}
