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

#pragma once

#include <cstdint>
#include <vector>

#include "spin/matrix.hpp"

namespace spin {

/// Ordered tuple of selfadjoint, pairwise anticommuting unitaries in a
/// common ambient dimension. Construction does not validate; call validate()
/// where an operation requires a well-formed tuple.
struct SpinTuple {
  std::size_t dim = 0;
  std::vector<CMatrix> unitaries;

  std::size_t arity() const { return unitaries.size(); }

  /// Throws InvariantViolation unless every generator is selfadjoint and
  /// involutive within sa_tol, distinct generators anticommute within
  /// anti_tol, and the ambient dimension is even.
  void validate(double sa_tol = 1e-10, double anti_tol = 1e-9) const;
};

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

/// The Pauli triple (sigma_X, sigma_Y, sigma_Z) in dimension 2.
SpinTuple pauli();

/// Irreducible m-tuple in dimension 2^k, m in {2k, 2k+1}: iterate
/// extend_by_one starting from the Pauli triple, dropping the last generator
/// when m is even. Throws BadArity for m < 2.
SpinTuple canonical_spin(std::size_t m);

/// One doubling step: (u_1 x 1, ..., u_{m-1} x 1, u_m x sX, u_m x sY,
/// u_m x sZ), taking arity m to m + 2 and dimension d to 2d.
SpinTuple extend_by_one(const SpinTuple& s);

/// Generator-wise conjugation (q* u_j q) by a unitary q.
SpinTuple conjugate(const SpinTuple& s, const CMatrix& q);

/// Generator-wise amplification (u_j x 1_r); reducible for r >= 2.
SpinTuple inflate(const SpinTuple& s, std::size_t r);

/// The spin pair (y* diag(1_n, -1_n) y, y* [[0, w], [w*, 0]] y) determined
/// by unitary witnesses w (n x n) and y (2n x 2n).
SpinTuple pair_from_witness(std::size_t n, const CMatrix& w, const CMatrix& y);

}  // namespace spin
