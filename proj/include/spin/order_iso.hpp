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

#include "spin/construct.hpp"
#include "spin/eig.hpp"
#include "spin/matrix.hpp"

namespace spin {

/// Coefficients (b_0, b_1, ..., b_m) of the level-n element
/// b_0 (x) 1_d + sum_j b_j (x) u_j; every b_j Hermitian n x n.
struct HermitianPencil {
  std::size_t level = 0;
  std::vector<CMatrix> coeffs;

  std::size_t arity() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  void validate() const;
};

/// b_0 (x) 1_d + sum_j b_j (x) u_j; coefficients left, generators right.
CMatrix assemble(const HermitianPencil& p, const SpinTuple& s);

/// Positivity of the assembled element. By realization independence the
/// verdict depends only on the coefficients, never on the tuple chosen.
PsdVerdict pencil_psd(const HermitianPencil& p, const SpinTuple& s, double tol = 1e-9);

/// The unital map on span{1, u_1, ..., u_m} sending generators to
/// generators; inputs are expanded in the HS-orthogonal canonical basis.
class UcpSpanMap {
 public:
  UcpSpanMap(SpinTuple src, SpinTuple dst);
  CMatrix apply(const CMatrix& x) const;
  const SpinTuple& src() const { return src_; }
  const SpinTuple& dst() const { return dst_; }

 private:
  SpinTuple src_;
  SpinTuple dst_;
};

UcpSpanMap ucp_between(const SpinTuple& src, const SpinTuple& dst);

/// Extend a spin pair (u, v) to the triple (u, v, -i u v), the completion
/// whose ordered product is i 1 and which is therefore a compressed copy of
/// the Pauli triple.
SpinTuple complete_to_pauli_triple(const SpinTuple& pair);

/// A completely positive map stored as its Choi matrix with optional Kraus
/// factors A_k (out_dim x in_dim), so that Phi(y) = sum_k A_k y A_k*.
struct CpMap {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  CMatrix choi;  // sum_ij e_ij (x) Phi(e_ij), source index on the left
  std::vector<CMatrix> kraus;
  double unital_residual = 0.0;
  double choi_min_eig = 0.0;
};

CMatrix apply_kraus(const std::vector<CMatrix>& kraus, const CMatrix& y);

/// The unital map M_2 -> M_d with 1 -> 1, sigma_X -> u, sigma_Y -> v,
/// sigma_Z -> w, extended through the Pauli expansion of the input.
CMatrix apply_triple_map(const SpinTuple& dst, const CMatrix& y);

/// Choi matrix, minimum eigenvalue and Kraus factors of the triple map onto
/// dst. Throws ChoiNotPsd when the minimum eigenvalue drops below -1e-6,
/// which happens exactly when dst is not a compressed copy of the Pauli
/// triple (non-spin inputs, or spin triples with ordered product -i 1).
CpMap choi_of_triple_map(const SpinTuple& dst);

struct InverseMapReport {
  double identity_residual = 0.0;        // max ||psi(Phi(x)) - x|| over the basis
  double trace_identity_residual = 0.0;  // max |tr(Phi(x)Phi(y)) - (d/2) tr(xy)|
};

/// Checks the inverse map psi(z) = (2/d) sum_k A_k* z A_k against the
/// identity on the span and the trace scaling identity on random span pairs.
InverseMapReport inverse_map_check(const SpinTuple& dst, const std::vector<CMatrix>& kraus,
                                   std::size_t samples = 50, std::uint64_t seed = 20260810);

}  // namespace spin
