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
#include "spin/random.hpp"
#include "spin/verify.hpp"

using namespace spin;

TEST_CASE("pauli generator identities") {
  const cplx i1(0.0, 1.0);
  CHECK((pauli_x() * pauli_y() - i1 * pauli_z()).frobenius_norm() == 0.0);
  CHECK(std::abs(pauli_y().trace()) == 0.0);
  CHECK((pauli_z() * pauli_z() - CMatrix::identity(2)).frobenius_norm() == 0.0);
}

TEST_CASE("canonical_spin matches the iterated construction") {
  const SpinTuple t3 = canonical_spin(3);
  CHECK(t3.dim == 2);
  for (int j = 0; j < 3; ++j)
    CHECK((t3.unitaries[j] - pauli().unitaries[j]).frobenius_norm() == 0.0);

  const SpinTuple t5 = canonical_spin(5);
  CHECK(t5.dim == 4);
  const CMatrix id2 = CMatrix::identity(2);
  const CMatrix expected[5] = {kron(pauli_x(), id2), kron(pauli_y(), id2),
                               kron(pauli_z(), pauli_x()), kron(pauli_z(), pauli_y()),
                               kron(pauli_z(), pauli_z())};
  for (int j = 0; j < 5; ++j) CHECK((t5.unitaries[j] - expected[j]).frobenius_norm() == 0.0);

  const SpinTuple t4 = canonical_spin(4);
  CHECK(t4.arity() == 4);
  for (int j = 0; j < 4; ++j) CHECK((t4.unitaries[j] - expected[j]).frobenius_norm() == 0.0);

  CHECK_THROWS_AS(canonical_spin(1), BadArity);

  for (std::size_t m = 2; m <= 9; ++m) {
    const SpinTuple t = canonical_spin(m);
    CHECK(t.arity() == m);
    CHECK(t.dim == (std::size_t{1} << (m / 2)));
    CHECK_NOTHROW(t.validate());
  }
}

TEST_CASE("extend_by_one doubles the dimension and adds two generators") {
  const SpinTuple q2 = extend_by_one(pauli());
  CHECK(q2.arity() == 5);
  CHECK(q2.dim == 4);
  const SpinTuple t5 = canonical_spin(5);
  for (int j = 0; j < 5; ++j) CHECK((q2.unitaries[j] - t5.unitaries[j]).frobenius_norm() == 0.0);
  CHECK(verify_spin(q2).all_ok(1e-12));

  // two full iterations agree with the closed-form canonical tuples
  const SpinTuple q3 = extend_by_one(q2);
  const SpinTuple t7 = canonical_spin(7);
  REQUIRE(q3.arity() == 7);
  for (int j = 0; j < 7; ++j) CHECK((q3.unitaries[j] - t7.unitaries[j]).frobenius_norm() == 0.0);
}

TEST_CASE("conjugate preserves the axioms") {
  const SpinTuple p = pauli();
  const SpinTuple same = conjugate(p, CMatrix::identity(2));
  for (int j = 0; j < 3; ++j)
    CHECK((same.unitaries[j] - p.unitaries[j]).frobenius_norm() == 0.0);

  const SpinTuple rot = conjugate(p, haar_unitary(2, 3));
  const VerifyReport r = verify_spin(rot);
  CHECK(r.anticommute_residual < 1e-9);
  for (double t : r.traces) CHECK(t < 1e-10);

  CMatrix not_unitary(2, 2);
  not_unitary(0, 0) = 2.0;
  not_unitary(1, 1) = 1.0;
  CHECK_THROWS_AS(conjugate(p, not_unitary), NotUnitary);
}

TEST_CASE("inflate") {
  const SpinTuple p = pauli();
  const SpinTuple same = inflate(p, 1);
  CHECK(same.dim == 2);
  const SpinTuple big = inflate(p, 3);
  CHECK(big.dim == 6);
  CHECK(big.arity() == 3);
  CHECK(commutant_dim(big.unitaries).dim == 9);  // 1 (x) M_3 commutes
}

TEST_CASE("pair_from_witness reproduces the Pauli pairs") {
  const SpinTuple zx = pair_from_witness(1, CMatrix{{1.0}}, CMatrix::identity(2));
  CHECK((zx.unitaries[0] - pauli_z()).frobenius_norm() == 0.0);
  CHECK((zx.unitaries[1] - pauli_x()).frobenius_norm() == 0.0);

  const SpinTuple zy = pair_from_witness(1, CMatrix{{cplx(0.0, -1.0)}}, CMatrix::identity(2));
  CHECK((zy.unitaries[1] - pauli_y()).frobenius_norm() == 0.0);

  const SpinTuple big = pair_from_witness(3, haar_unitary(3, 4), haar_unitary(6, 5));
  const VerifyReport r = verify_spin(big);
  CHECK(r.anticommute_residual < 1e-10);
  CHECK(r.selfadjoint_residual < 1e-10);

  CHECK_THROWS_AS(pair_from_witness(2, CMatrix::identity(2) * 2.0, CMatrix::identity(4)),
                  NotUnitary);
}

TEST_CASE("verify_spin on the Pauli triple") {
  const VerifyReport r = verify_spin(pauli());
  CHECK(r.selfadjoint_residual < 1e-12);
  CHECK(r.unitarity_residual < 1e-12);
  CHECK(r.anticommute_residual < 1e-12);
  CHECK(r.independent);
  CHECK(r.dim_parity_ok);
  CHECK(r.gram_min_eig == doctest::Approx(2.0));
  CHECK(r.all_ok(1e-12));
}

TEST_CASE("verify_spin flags a repeated generator") {
  const SpinTuple bad{2, {pauli_x(), pauli_x()}};
  const VerifyReport r = verify_spin(bad);
  // anticommutator of sX with itself is 2*1, Frobenius norm 2 sqrt(2)
  CHECK(r.anticommute_residual == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(r.independent);  // Gram matrix is singular
  CHECK_FALSE(r.all_ok());
}

TEST_CASE("verify_spin flags odd ambient dimension") {
  const SpinTuple odd{3, {CMatrix::identity(3)}};
  CHECK_FALSE(verify_spin(odd).dim_parity_ok);
}

TEST_CASE("commutant_dim") {
  CHECK(commutant_dim(pauli().unitaries).dim == 1);
  CHECK(commutant_dim(inflate(pauli(), 2).unitaries).dim == 4);
  CHECK(commutant_dim({}, 2).dim == 4);
  CHECK_THROWS_AS(commutant_dim({}, 0), ShapeMismatch);
  CHECK_THROWS_AS(commutant_dim({CMatrix::identity(2), CMatrix::identity(3)}), ShapeMismatch);

  // basis is orthonormal and commutes
  const auto res = commutant_dim(inflate(pauli(), 2).unitaries);
  for (const auto& z : res.basis) {
    CHECK(std::abs(hs_inner(z, z) - cplx(1.0, 0.0)) < 1e-10);
    for (const auto& u : inflate(pauli(), 2).unitaries)
      CHECK((z * u - u * z).frobenius_norm() < 1e-8);
  }
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(canonical_spin(5)));
  CHECK_FALSE(is_irreducible(inflate(canonical_spin(3), 2)));
  CHECK(is_irreducible(conjugate(canonical_spin(4), haar_unitary(4, 17))));
}

TEST_CASE("algebra_dim") {
  CHECK(algebra_dim({pauli_x(), pauli_y()}) == 4);
  CHECK(algebra_dim(canonical_spin(5).unitaries) == 16);
  CHECK(algebra_dim({CMatrix::identity(2)}) == 1);
  CHECK(algebra_dim(canonical_spin(4).unitaries) == 16);
  CHECK_THROWS_AS(algebra_dim({canonical_spin(5).unitaries[0]}, 0), CapExceeded);
}

TEST_CASE("envelope product identity across the iterated construction") {
  CHECK(envelope_product_identity(1) < 1e-12);
  CHECK(envelope_product_identity(2) < 1e-12);
  CHECK(envelope_product_identity(3) < 1e-12);
}

TEST_CASE("intertwiner on identical irreducible tuples") {
  const auto q = intertwiner(pauli(), pauli());
  REQUIRE(q.has_value());
  CHECK((q->adjoint() * *q - CMatrix::identity(2)).frobenius_norm() < 1e-10);
  for (const auto& u : pauli().unitaries)
    CHECK((*q * u - u * *q).frobenius_norm() < 1e-8);
}

TEST_CASE("intertwiner recovers a planted conjugation") {
  const SpinTuple u = canonical_spin(4);
  const CMatrix q0 = haar_unitary(4, 91);
  const SpinTuple v = conjugate(u, q0);
  const auto q = intertwiner(u, v);
  REQUIRE(q.has_value());
  for (std::size_t j = 0; j < 4; ++j)
    CHECK((*q * u.unitaries[j] - v.unitaries[j] * *q).frobenius_norm() < 1e-8);
}

TEST_CASE("intertwiner shape and absence cases") {
  const SpinTuple p2{2, {pauli_x(), pauli_y()}};
  const SpinTuple big{4, {kron(pauli_x(), CMatrix::identity(2)), kron(pauli_y(), CMatrix::identity(2))}};
  CHECK_THROWS_AS(intertwiner(p2, big), ShapeMismatch);

  // multiplicity (2,0) vs (1,1) decompositions admit no unitary intertwiner
  const CMatrix id2 = CMatrix::identity(2);
  const SpinTuple u = inflate(pauli(), 2);
  const SpinTuple v{4,
                    {kron(pauli_x(), id2), kron(pauli_y(), id2),
                     kron(pauli_z(), CMatrix::diagonal({1.0, -1.0}))}};
  CHECK_FALSE(intertwiner(u, v).has_value());
}
