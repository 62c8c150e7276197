/* Copyright 2026 The Spinsys Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spin/construct.hpp"
#include "spin/eig.hpp"
#include "spin/matrix.hpp"
#include "spin/random.hpp"

using namespace spin;

namespace {

double rel_recon_error(const CMatrix& a, const EigenDecomposition& e) {
  CMatrix recon(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.rows(); ++k)
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        recon(i, j) += e.values[k] * e.vectors(i, k) * std::conj(e.vectors(j, k));
  return (recon - a).frobenius_norm() / std::max(1.0, a.frobenius_norm());
}

}  // namespace

TEST_CASE("hermitian_eig on the diagonal involution") {
  const auto e = hermitian_eig(pauli_z());
  CHECK(e.values.size() == 2);
  CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  // eigenvector columns are permuted identity columns for a diagonal input
  CHECK(std::abs(e.vectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(e.vectors(0, 1)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig on sigma_X") {
  const auto e = hermitian_eig(pauli_x());
  CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((e.vectors.adjoint() * e.vectors - CMatrix::identity(2)).frobenius_norm() < 1e-12);
}

TEST_CASE("hermitian_eig reconstructs a random 6x6 Hermitian matrix") {
  Rng rng(11);
  const CMatrix a = rng.hermitian(6);
  const auto e = hermitian_eig(a);
  CHECK(rel_recon_error(a, e) < 1e-10);
  CHECK((e.vectors.adjoint() * e.vectors - CMatrix::identity(6)).frobenius_norm() < 1e-10);
  for (std::size_t k = 1; k < 6; ++k) CHECK(e.values[k - 1] <= e.values[k]);
}

TEST_CASE("hermitian_eig recovers a planted spectrum under conjugation") {
  for (std::size_t d : {5u, 12u, 32u}) {
    Rng rng(1000 + d);
    std::vector<double> planted(d);
    for (auto& x : planted) x = 4.0 * rng.gaussian();
    std::sort(planted.begin(), planted.end());
    CMatrix diag(d, d);
    for (std::size_t i = 0; i < d; ++i) diag(i, i) = planted[i];
    const CMatrix p = haar_unitary(d, 77 + d);
    const auto e = hermitian_eig(p * diag * p.adjoint());
    for (std::size_t i = 0; i < d; ++i)
      CHECK(std::abs(e.values[i] - planted[i]) < 1e-9 * std::max(1.0, std::abs(planted[i])));
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  CMatrix a{{0.0, 1.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(hermitian_eig(a), NotHermitian);
}

TEST_CASE("is_psd basics") {
  const auto id = is_psd(CMatrix::identity(4));
  CHECK(id.psd);
  CHECK(id.min_eig == doctest::Approx(1.0));

  const auto neg = is_psd(CMatrix::diagonal({1.0, -1e-3}), 1e-9);
  CHECK_FALSE(neg.psd);
  CHECK(neg.min_eig == doctest::Approx(-1e-3));

  // 1 (x) 1 - sX (x) sX: spectrum of sX (x) sX is {-1, -1, 1, 1}
  const CMatrix m = CMatrix::identity(4) - kron(pauli_x(), pauli_x());
  const auto v = is_psd(m);
  CHECK(v.psd);
  CHECK(std::abs(v.min_eig) < 1e-12);

  CHECK_THROWS_AS(is_psd(CMatrix{{0.0, 1.0}, {0.0, 0.0}}), NotHermitian);
}

TEST_CASE("is_psd holds for gram matrices x* x") {
  Rng rng(21);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t r = 1 + rng.index(6), c = 1 + rng.index(6);
    const CMatrix x = rng.gaussian_matrix(r, c);
    CHECK(is_psd(x.adjoint() * x).psd);
  }
}

TEST_CASE("kron agrees with hand expansion") {
  const CMatrix zi = kron(pauli_z(), CMatrix::identity(2));
  CHECK(zi == CMatrix::diagonal({1.0, 1.0, -1.0, -1.0}));

  // sX (x) sX written out entry by entry
  const CMatrix xx_expected{{0.0, 0.0, 0.0, 1.0},
                            {0.0, 0.0, 1.0, 0.0},
                            {0.0, 1.0, 0.0, 0.0},
                            {1.0, 0.0, 0.0, 0.0}};
  CHECK((kron(pauli_x(), pauli_x()) - xx_expected).frobenius_norm() == 0.0);

  const CMatrix g{{0.0, 2.0}, {0.0, 0.0}};
  const CMatrix block = kron(CMatrix::identity(2), g);
  CHECK(block(0, 1) == cplx(2.0, 0.0));
  CHECK(block(2, 3) == cplx(2.0, 0.0));
  CHECK(block(0, 3) == cplx(0.0, 0.0));
}

TEST_CASE("kron is multiplicative") {
  Rng rng(31);
  const CMatrix a = rng.gaussian_matrix(3, 3), b = rng.gaussian_matrix(3, 3);
  const CMatrix c = rng.gaussian_matrix(3, 3), d = rng.gaussian_matrix(3, 3);
  CHECK((kron(a, b) * kron(c, d) - kron(a * c, b * d)).frobenius_norm() < 1e-10);
}

TEST_CASE("haar_unitary") {
  const CMatrix u1 = haar_unitary(1, 5);
  CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-14);

  const CMatrix a = haar_unitary(8, 123);
  const CMatrix b = haar_unitary(8, 123);
  CHECK(a == b);  // identical bytes for identical seeds
  CHECK(haar_unitary(8, 124) == haar_unitary(8, 124));
  CHECK_FALSE(a == haar_unitary(8, 124));

  const CMatrix u = haar_unitary(6, 9);
  CHECK((u.adjoint() * u - CMatrix::identity(6)).frobenius_norm() < 1e-10);

  CHECK_THROWS_AS(haar_unitary(0, 1), BadInput);
}

TEST_CASE("hs_inner") {
  CHECK(std::abs(hs_inner(pauli_x(), pauli_y())) < 1e-15);
  CHECK(hs_inner(pauli_x(), pauli_x()) == cplx(2.0, 0.0));
  for (const auto& u : pauli().unitaries)
    CHECK(std::abs(hs_inner(CMatrix::identity(2), u)) < 1e-15);
  CHECK_THROWS_AS(hs_inner(CMatrix::identity(2), CMatrix::identity(3)), ShapeMismatch);
}

TEST_CASE("operator_norm matches the spectral radius on normal matrices") {
  CHECK(operator_norm(pauli_x()) == doctest::Approx(1.0));
  const CMatrix g{{0.0, 2.0}, {0.0, 0.0}};
  CHECK(operator_norm(g) == doctest::Approx(2.0));
}

TEST_CASE("unitary_polar_factor recovers a unitary from a scaled one") {
  Rng rng(41);
  const CMatrix q0 = haar_unitary(5, 55);
  const CMatrix scaled = cplx(0.7, 0.2) * q0;
  const auto q = unitary_polar_factor(scaled);
  REQUIRE(q.has_value());
  CHECK((q->adjoint() * *q - CMatrix::identity(5)).frobenius_norm() < 1e-10);

  CMatrix singular(3, 3);
  singular(0, 0) = 1.0;
  CHECK_FALSE(unitary_polar_factor(singular).has_value());
}

TEST_CASE("matrix shape errors") {
  CHECK_THROWS_AS(CMatrix::identity(2) + CMatrix::identity(3), ShapeMismatch);
  CHECK_THROWS_AS(CMatrix::identity(2) * CMatrix::identity(3), ShapeMismatch);
  CHECK_THROWS_AS(CMatrix(2, 3, std::vector<cplx>(5)), ShapeMismatch);
}
