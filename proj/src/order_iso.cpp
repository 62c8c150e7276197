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

#include "spin/order_iso.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spin/random.hpp"

namespace spin {

void HermitianPencil::validate() const {
  if (coeffs.empty()) throw BadArity("HermitianPencil: needs at least the constant coefficient");
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const CMatrix& b = coeffs[j];
    if (b.rows() != level || b.cols() != level)
      throw ShapeMismatch("HermitianPencil: coefficient " + std::to_string(j) +
                          " is not level x level");
    if ((b - b.adjoint()).frobenius_norm() > 1e-10 * std::max(1.0, b.frobenius_norm()))
      throw NotHermitian("HermitianPencil: coefficient " + std::to_string(j) +
                         " is not Hermitian");
  }
}

CMatrix assemble(const HermitianPencil& p, const SpinTuple& s) {
  p.validate();
  if (p.coeffs.size() != s.arity() + 1)
    throw ArityMismatch("assemble: pencil has " + std::to_string(p.arity()) +
                        " generator coefficients, tuple has arity " + std::to_string(s.arity()));
  CMatrix acc = kron(p.coeffs[0], CMatrix::identity(s.dim));
  for (std::size_t j = 0; j < s.arity(); ++j) acc += kron(p.coeffs[j + 1], s.unitaries[j]);
  return acc;
}

PsdVerdict pencil_psd(const HermitianPencil& p, const SpinTuple& s, double tol) {
  return is_psd(assemble(p, s), tol);
}

UcpSpanMap::UcpSpanMap(SpinTuple src, SpinTuple dst) : src_(std::move(src)), dst_(std::move(dst)) {
  if (src_.arity() != dst_.arity()) throw ArityMismatch("ucp_between: arities differ");
}

CMatrix UcpSpanMap::apply(const CMatrix& x) const {
  if (x.rows() != src_.dim || x.cols() != src_.dim)
    throw ShapeMismatch("UcpSpanMap::apply: input shape does not match the source");
  const double d = static_cast<double>(src_.dim);
  CMatrix out = (x.trace() / d) * CMatrix::identity(dst_.dim);
  for (std::size_t j = 0; j < src_.arity(); ++j) {
    const cplx alpha = hs_inner(x, src_.unitaries[j]) / d;
    out += alpha * dst_.unitaries[j];
  }
  return out;
}

UcpSpanMap ucp_between(const SpinTuple& src, const SpinTuple& dst) {
  return UcpSpanMap(src, dst);
}

SpinTuple complete_to_pauli_triple(const SpinTuple& pair) {
  if (pair.arity() != 2) throw InvariantViolation("complete_to_pauli_triple: arity 2 required");
  pair.validate();
  // t = -i u v gives u v t = i 1, the sign for which (u, v, t) is a
  // compressed copy of the Pauli triple; the opposite sign produces the
  // chirality-flipped class whose triple map is not completely positive.
  SpinTuple out = pair;
  out.unitaries.push_back(cplx(0.0, -1.0) * (pair.unitaries[0] * pair.unitaries[1]));
  out.validate();
  return out;
}

CMatrix apply_kraus(const std::vector<CMatrix>& kraus, const CMatrix& y) {
  if (kraus.empty()) throw BadInput("apply_kraus: empty factor list");
  CMatrix out(kraus.front().rows(), kraus.front().rows());
  for (const auto& a : kraus) out += a * y * a.adjoint();
  return out;
}

CMatrix apply_triple_map(const SpinTuple& dst, const CMatrix& y) {
  if (dst.arity() != 3) throw ArityMismatch("apply_triple_map: arity 3 required");
  if (y.rows() != 2 || y.cols() != 2) throw ShapeMismatch("apply_triple_map: input must be 2 x 2");
  const cplx a0 = y.trace() * 0.5;
  const cplx a1 = (pauli_x() * y).trace() * 0.5;
  const cplx a2 = (pauli_y() * y).trace() * 0.5;
  const cplx a3 = (pauli_z() * y).trace() * 0.5;
  CMatrix out = a0 * CMatrix::identity(dst.dim);
  out += a1 * dst.unitaries[0];
  out += a2 * dst.unitaries[1];
  out += a3 * dst.unitaries[2];
  return out;
}

CpMap choi_of_triple_map(const SpinTuple& dst) {
  if (dst.arity() != 3) throw ArityMismatch("choi_of_triple_map: arity 3 required");
  const std::size_t d = dst.dim;
  const CMatrix& u = dst.unitaries[0];
  const CMatrix& v = dst.unitaries[1];
  const CMatrix& w = dst.unitaries[2];
  const CMatrix id = CMatrix::identity(d);
  const cplx i1(0.0, 1.0);

  // Images of the matrix units under the Pauli expansion:
  // e11 = (1 + sZ)/2, e12 = (sX + i sY)/2, e22 = (1 - sZ)/2.
  const CMatrix f11 = 0.5 * (id + w);
  const CMatrix f12 = 0.5 * (u + i1 * v);
  const CMatrix f21 = f12.adjoint();
  const CMatrix f22 = 0.5 * (id - w);

  CMatrix choi(2 * d, 2 * d);
  choi.set_block(0, 0, f11);
  choi.set_block(0, d, f12);
  choi.set_block(d, 0, f21);
  choi.set_block(d, d, f22);

  const auto eig = hermitian_eig(choi, 1e-8);
  CpMap out;
  out.in_dim = 2;
  out.out_dim = d;
  out.choi = choi;
  out.choi_min_eig = eig.values.front();
  if (out.choi_min_eig < -1e-6)
    throw ChoiNotPsd("choi_of_triple_map: Choi matrix has eigenvalue " +
                     std::to_string(out.choi_min_eig));

  // Kraus factors from the spectral decomposition; the relative cut is
  // scale-free because tr(choi) = out_dim for a unital map.
  const double cut = 1e-10 * choi.trace().real();
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (eig.values[k] <= cut) continue;
    const double root = std::sqrt(eig.values[k]);
    CMatrix a(d, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t r = 0; r < d; ++r) a(r, i) = root * eig.vectors(i * d + r, k);
    out.kraus.push_back(std::move(a));
  }
  out.unital_residual = (apply_kraus(out.kraus, CMatrix::identity(2)) - id).frobenius_norm();
  return out;
}

InverseMapReport inverse_map_check(const SpinTuple& dst, const std::vector<CMatrix>& kraus,
                                   std::size_t samples, std::uint64_t seed) {
  if (dst.arity() != 3) throw ArityMismatch("inverse_map_check: arity 3 required");
  const double d = static_cast<double>(dst.dim);
  const double scale = 2.0 / d;

  auto psi = [&](const CMatrix& z) {
    CMatrix acc(2, 2);
    for (const auto& a : kraus) acc += a.adjoint() * z * a;
    return scale * acc;
  };

  InverseMapReport rep;
  const CMatrix basis[4] = {CMatrix::identity(2), pauli_x(), pauli_y(), pauli_z()};
  for (const auto& x : basis) {
    const CMatrix round_trip = psi(apply_triple_map(dst, x));
    rep.identity_residual = std::max(rep.identity_residual, (round_trip - x).frobenius_norm());
  }

  Rng rng(mix_seed(seed, 0x7ace1d));
  for (std::size_t t = 0; t < samples; ++t) {
    CMatrix x(2, 2), y(2, 2);
    for (int b = 0; b < 4; ++b) {
      x += rng.complex_gaussian() * basis[b];
      y += rng.complex_gaussian() * basis[b];
    }
    const cplx lhs = (apply_triple_map(dst, x) * apply_triple_map(dst, y)).trace();
    const cplx rhs = (d / 2.0) * (x * y).trace();
    rep.trace_identity_residual = std::max(rep.trace_identity_residual, std::abs(lhs - rhs));
  }
  return rep;
}

}  // namespace spin
