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

#include "spin/construct.hpp"

#include <string>

namespace spin {

void SpinTuple::validate(double sa_tol, double anti_tol) const {
  if (dim % 2 != 0)
    throw InvariantViolation("SpinTuple: ambient dimension must be even");
  const CMatrix id = CMatrix::identity(dim);
  for (std::size_t j = 0; j < unitaries.size(); ++j) {
    const CMatrix& u = unitaries[j];
    if (u.rows() != dim || u.cols() != dim)
      throw InvariantViolation("SpinTuple: generator " + std::to_string(j) + " has wrong shape");
    if (!u.all_finite())
      throw InvariantViolation("SpinTuple: generator " + std::to_string(j) + " has non-finite entries");
    if ((u - u.adjoint()).frobenius_norm() > sa_tol)
      throw InvariantViolation("SpinTuple: generator " + std::to_string(j) + " is not selfadjoint");
    if ((u * u - id).frobenius_norm() > sa_tol)
      throw InvariantViolation("SpinTuple: generator " + std::to_string(j) + " is not an involution");
  }
  for (std::size_t i = 0; i < unitaries.size(); ++i)
    for (std::size_t j = i + 1; j < unitaries.size(); ++j) {
      const CMatrix anti = unitaries[i] * unitaries[j] + unitaries[j] * unitaries[i];
      if (anti.frobenius_norm() > anti_tol)
        throw InvariantViolation("SpinTuple: generators " + std::to_string(i) + " and " +
                                 std::to_string(j) + " do not anticommute");
    }
}

CMatrix pauli_x() { return CMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
CMatrix pauli_y() { return CMatrix{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}}; }
CMatrix pauli_z() { return CMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

SpinTuple pauli() { return SpinTuple{2, {pauli_x(), pauli_y(), pauli_z()}}; }

SpinTuple extend_by_one(const SpinTuple& s) {
  s.validate();
  if (s.arity() < 1) throw BadArity("extend_by_one: empty tuple");
  const std::size_t m = s.arity();
  const CMatrix id2 = CMatrix::identity(2);
  SpinTuple out;
  out.dim = 2 * s.dim;
  out.unitaries.reserve(m + 2);
  for (std::size_t j = 0; j + 1 < m; ++j) out.unitaries.push_back(kron(s.unitaries[j], id2));
  out.unitaries.push_back(kron(s.unitaries[m - 1], pauli_x()));
  out.unitaries.push_back(kron(s.unitaries[m - 1], pauli_y()));
  out.unitaries.push_back(kron(s.unitaries[m - 1], pauli_z()));
  out.validate();
  return out;
}

SpinTuple canonical_spin(std::size_t m) {
  if (m < 2) throw BadArity("canonical_spin: arity must be >= 2");
  const std::size_t k = m / 2;
  SpinTuple t = pauli();
  for (std::size_t i = 2; i <= k; ++i) t = extend_by_one(t);
  if (m % 2 == 0) t.unitaries.pop_back();
  return t;
}

SpinTuple conjugate(const SpinTuple& s, const CMatrix& q) {
  if (q.rows() != s.dim || q.cols() != s.dim)
    throw ShapeMismatch("conjugate: unitary has wrong shape");
  if ((q.adjoint() * q - CMatrix::identity(s.dim)).frobenius_norm() > 1e-8)
    throw NotUnitary("conjugate: q is not unitary");
  SpinTuple out;
  out.dim = s.dim;
  out.unitaries.reserve(s.arity());
  for (const auto& u : s.unitaries) out.unitaries.push_back(q.adjoint() * u * q);
  return out;
}

SpinTuple inflate(const SpinTuple& s, std::size_t r) {
  if (r < 1) throw BadInput("inflate: multiplicity must be >= 1");
  if (r == 1) return s;
  const CMatrix idr = CMatrix::identity(r);
  SpinTuple out;
  out.dim = s.dim * r;
  out.unitaries.reserve(s.arity());
  for (const auto& u : s.unitaries) out.unitaries.push_back(kron(u, idr));
  return out;
}

SpinTuple pair_from_witness(std::size_t n, const CMatrix& w, const CMatrix& y) {
  if (w.rows() != n || w.cols() != n) throw ShapeMismatch("pair_from_witness: w must be n x n");
  if (y.rows() != 2 * n || y.cols() != 2 * n)
    throw ShapeMismatch("pair_from_witness: y must be 2n x 2n");
  if ((w.adjoint() * w - CMatrix::identity(n)).frobenius_norm() > 1e-8)
    throw NotUnitary("pair_from_witness: w is not unitary");
  if ((y.adjoint() * y - CMatrix::identity(2 * n)).frobenius_norm() > 1e-8)
    throw NotUnitary("pair_from_witness: y is not unitary");

  CMatrix su(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    su(i, i) = 1.0;
    su(n + i, n + i) = -1.0;
  }
  CMatrix sv(2 * n, 2 * n);
  sv.set_block(0, n, w);
  sv.set_block(n, 0, w.adjoint());

  SpinTuple out;
  out.dim = 2 * n;
  out.unitaries = {y.adjoint() * su * y, y.adjoint() * sv * y};
  out.validate();
  return out;
}

}  // namespace spin
