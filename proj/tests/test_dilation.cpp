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
#include "spin/dilation.hpp"
#include "spin/order_iso.hpp"
#include "spin/random.hpp"

using namespace spin;

TEST_CASE("dilating the Pauli triple is trivial") {
  const Dilation d = dilate_triple(pauli());
  CHECK(d.ell == 1);
  CHECK(d.isometry_residual < 1e-10);
  for (double r : d.residuals) CHECK(r < 1e-10);
  // the isometry is a phase times the identity
  CHECK(std::abs(d.isometry(0, 1)) < 1e-12);
  CHECK(std::abs(std::abs(d.isometry(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("dilation of amplified triples compresses exactly") {
  const SpinTuple t = inflate(pauli(), 2);
  const Dilation d = dilate_triple(t);
  CHECK(d.ell == 2);
  CHECK(d.isometry_residual < 1e-9);
  for (double r : d.residuals) CHECK(r < 1e-8);
  CHECK(2 * d.ell >= t.dim);
}

TEST_CASE("dilation of a conjugated triple") {
  const SpinTuple t = conjugate(inflate(pauli(), 4), haar_unitary(8, 61));
  const Dilation d = dilate_triple(t);
  CHECK(d.isometry_residual < 1e-9);
  for (double r : d.residuals) CHECK(r < 1e-8);
  CHECK(2 * d.ell >= t.dim);

  // explicit round trip: compressing sigma_j (x) 1 reproduces each generator
  const CMatrix idl = CMatrix::identity(d.ell);
  const CMatrix sigmas[3] = {pauli_x(), pauli_y(), pauli_z()};
  for (int j = 0; j < 3; ++j) {
    const CMatrix back = d.isometry.adjoint() * kron(sigmas[j], idl) * d.isometry;
    CHECK((back - t.unitaries[j]).frobenius_norm() < 1e-8);
  }
}

TEST_CASE("reverse dilation compresses the amplified triple onto Pauli") {
  const Dilation triv = reverse_dilate(pauli());
  CHECK(triv.ell == 1);
  CHECK(triv.isometry_residual < 1e-10);
  for (double r : triv.residuals) CHECK(r < 1e-10);

  const SpinTuple t = conjugate(inflate(pauli(), 2), haar_unitary(4, 62));
  const Dilation d = reverse_dilate(t);
  CHECK(d.isometry_residual < 1e-9);
  for (double r : d.residuals) CHECK(r < 1e-8);

  const CMatrix idl = CMatrix::identity(d.ell);
  const CMatrix back = d.isometry.adjoint() * kron(t.unitaries[0], idl) * d.isometry;
  CHECK((back - pauli_x()).frobenius_norm() < 1e-8);
}

TEST_CASE("dilation propagates the Choi failure for flipped triples") {
  const SpinTuple flipped{2, {pauli_x(), pauli_y(), cplx(-1.0, 0.0) * pauli_z()}};
  CHECK_THROWS_AS(dilate_triple(flipped), ChoiNotPsd);
  CHECK_THROWS_AS(reverse_dilate(flipped), ChoiNotPsd);
}
