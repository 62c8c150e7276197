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
#include "spin/order_iso.hpp"
#include "spin/random.hpp"

using namespace spin;

namespace {
HermitianPencil scalar_pencil(std::initializer_list<double> coeffs) {
  HermitianPencil p;
  p.level = 1;
  for (double c : coeffs) p.coeffs.push_back(CMatrix{{c}});
  return p;
}
}  // namespace

TEST_CASE("assemble basics") {
  const SpinTuple p3 = pauli();
  const CMatrix unit = assemble(scalar_pencil({1.0, 0.0, 0.0, 0.0}), p3);
  CHECK((unit - CMatrix::identity(2)).frobenius_norm() == 0.0);

  const SpinTuple single{2, {pauli_x()}};
  const auto v = pencil_psd(scalar_pencil({1.0, 1.0}), single);
  CHECK(v.psd);
  CHECK(std::abs(v.min_eig) < 1e-12);  // eigenvalues 0 and 2

  HermitianPencil p;
  p.level = 2;
  p.coeffs = {CMatrix::identity(2), pauli_x()};
  const auto v2 = pencil_psd(p, single);
  CHECK(v2.psd);
  CHECK(std::abs(v2.min_eig) < 1e-12);  // spectrum of sX (x) sX is {-1, 1}

  CHECK_THROWS_AS(assemble(scalar_pencil({1.0, 1.0}), p3), ArityMismatch);
}

TEST_CASE("single-generator pencils match the two-sided criterion") {
  // b0 (x) 1 + b1 (x) u is PSD exactly when b0 + b1 and b0 - b1 are
  const SpinTuple u1{2, {pauli_z()}};
  const SpinTuple u2 = conjugate(inflate(u1, 3), haar_unitary(6, 44));
  Rng rng(45);
  for (int t = 0; t < 40; ++t) {
    HermitianPencil p;
    p.level = 3;
    const CMatrix h0 = rng.hermitian(3);
    p.coeffs = {h0 + (1.5 * rng.uniform()) * CMatrix::identity(3), rng.hermitian(3)};
    const bool direct = is_psd(p.coeffs[0] + p.coeffs[1]).psd && is_psd(p.coeffs[0] - p.coeffs[1]).psd;
    CHECK(pencil_psd(p, u1).psd == direct);
    CHECK(pencil_psd(p, u2).psd == direct);
  }
}

TEST_CASE("scalar pencil against the Pauli triple") {
  for (double beta : {0.5, 0.999}) CHECK(pencil_psd(scalar_pencil({1.0, beta, 0.0, 0.0}), pauli()).psd);
  for (double beta : {1.001, 2.0}) {
    const auto v = pencil_psd(scalar_pencil({1.0, beta, 0.0, 0.0}), pauli());
    CHECK_FALSE(v.psd);
    CHECK(v.min_eig == doctest::Approx(1.0 - beta).epsilon(1e-10));
  }
}

TEST_CASE("ucp span map") {
  const SpinTuple src = canonical_spin(4);
  const UcpSpanMap ident = ucp_between(src, src);
  Rng rng(46);
  CMatrix x = rng.complex_gaussian() * CMatrix::identity(4);
  for (const auto& u : src.unitaries) x += rng.complex_gaussian() * u;
  CHECK((ident.apply(x) - x).frobenius_norm() < 1e-10);

  const CMatrix q = haar_unitary(4, 47);
  const SpinTuple dst = conjugate(src, q);
  const UcpSpanMap fwd = ucp_between(src, dst);
  CHECK((fwd.apply(x) - q.adjoint() * x * q).frobenius_norm() < 1e-9);

  // round trip is the identity on the span
  const UcpSpanMap back = ucp_between(dst, src);
  CHECK((back.apply(fwd.apply(x)) - x).frobenius_norm() < 1e-9);

  CHECK_THROWS_AS(ucp_between(canonical_spin(3), canonical_spin(4)), ArityMismatch);
}

TEST_CASE("positivity transfers through the span map") {
  const SpinTuple src = canonical_spin(3);
  const SpinTuple dst = conjugate(inflate(src, 2), haar_unitary(4, 48));
  Rng rng(49);
  for (int t = 0; t < 20; ++t) {
    HermitianPencil p;
    p.level = 2;
    p.coeffs.resize(4);
    for (int j = 1; j <= 3; ++j) p.coeffs[j] = rng.hermitian(2);
    const CMatrix h0 = rng.hermitian(2);
    p.coeffs[0] = h0;
    const double mu = pencil_psd(p, src).min_eig;
    p.coeffs[0] = h0 + (0.1 - mu) * CMatrix::identity(2);  // min eig exactly 0.1
    CHECK(pencil_psd(p, src).psd);
    CHECK(pencil_psd(p, dst).psd);
  }
}

TEST_CASE("complete_to_pauli_triple") {
  const SpinTuple xy{2, {pauli_x(), pauli_y()}};
  const SpinTuple t1 = complete_to_pauli_triple(xy);
  CHECK((t1.unitaries[2] - pauli_z()).frobenius_norm() < 1e-15);  // -i sX sY = sZ
  CHECK_NOTHROW(t1.validate());

  const SpinTuple zx{2, {pauli_z(), pauli_x()}};
  const SpinTuple t2 = complete_to_pauli_triple(zx);
  CHECK((t2.unitaries[2] - pauli_y()).frobenius_norm() < 1e-15);  // -i sZ sX = sY
  CHECK_NOTHROW(t2.validate());

  const SpinTuple big = pair_from_witness(4, haar_unitary(4, 50), haar_unitary(8, 51));
  const SpinTuple t3 = complete_to_pauli_triple(big);
  CHECK_NOTHROW(t3.validate(1e-9, 1e-9));
  // the completed triple admits a positive Choi matrix
  CHECK(choi_of_triple_map(t3).choi_min_eig >= -1e-9);

  CHECK_THROWS_AS(complete_to_pauli_triple(pauli()), InvariantViolation);
}

TEST_CASE("choi of the identity channel") {
  const CpMap cp = choi_of_triple_map(pauli());
  CHECK(cp.in_dim == 2);
  CHECK(cp.out_dim == 2);
  // twice the maximally entangled projector
  CMatrix expected(4, 4);
  expected(0, 0) = expected(0, 3) = expected(3, 0) = expected(3, 3) = 1.0;
  CHECK((cp.choi - expected).frobenius_norm() < 1e-12);
  CHECK(cp.kraus.size() == 1);
  CHECK(cp.choi_min_eig >= -1e-12);
  CHECK(cp.unital_residual < 1e-12);
  // the single Kraus factor is a phase times the identity
  const CMatrix a = cp.kraus[0];
  CHECK((a * a.adjoint() - CMatrix::identity(2)).frobenius_norm() < 1e-10);
  CHECK(std::abs(a(0, 1)) < 1e-12);
}

TEST_CASE("choi of amplified and conjugated triples") {
  const SpinTuple t = conjugate(inflate(pauli(), 2), haar_unitary(4, 52));
  const CpMap cp = choi_of_triple_map(t);
  CHECK(cp.choi_min_eig >= -1e-9);
  CHECK(cp.kraus.size() == 2);  // multiplicity of the identity representation
  CHECK(cp.unital_residual < 1e-9);

  // Kraus reconstruction against the matrix units
  const CMatrix units[4] = {CMatrix{{1.0, 0.0}, {0.0, 0.0}}, CMatrix{{0.0, 1.0}, {0.0, 0.0}},
                            CMatrix{{0.0, 0.0}, {1.0, 0.0}}, CMatrix{{0.0, 0.0}, {0.0, 1.0}}};
  for (const auto& e : units)
    CHECK((apply_kraus(cp.kraus, e) - apply_triple_map(t, e)).frobenius_norm() < 1e-8);
}

TEST_CASE("chirality-flipped triples are detected by the Choi test") {
  // (sX, sY, -sZ) satisfies the spin axioms but its ordered product is -i,
  // so the generator-matching map from the Pauli triple is not completely
  // positive; the Choi matrix picks up eigenvalue -1.
  const SpinTuple flipped{2, {pauli_x(), pauli_y(), cplx(-1.0, 0.0) * pauli_z()}};
  CHECK_NOTHROW(flipped.validate());
  CHECK_THROWS_AS(choi_of_triple_map(flipped), ChoiNotPsd);

  // same detection for a non-spin tuple
  const SpinTuple garbage{2, {pauli_z(), pauli_z(), pauli_z()}};
  CHECK_THROWS_AS(choi_of_triple_map(garbage), ChoiNotPsd);
}

TEST_CASE("inverse map and trace identity") {
  const InverseMapReport idchk = inverse_map_check(pauli(), choi_of_triple_map(pauli()).kraus);
  CHECK(idchk.identity_residual < 1e-10);
  CHECK(idchk.trace_identity_residual < 1e-10);

  const SpinTuple t = inflate(pauli(), 3);
  const InverseMapReport rep = inverse_map_check(t, choi_of_triple_map(t).kraus);
  CHECK(rep.identity_residual < 1e-8);
  CHECK(rep.trace_identity_residual < 1e-8);

  // tr((y (x) 1_3)^2) = 6 tr(y^2)/2 on the generator itself
  const cplx lhs = (apply_triple_map(t, pauli_x()) * apply_triple_map(t, pauli_x())).trace();
  CHECK(std::abs(lhs - cplx(6.0, 0.0)) < 1e-12);
}
