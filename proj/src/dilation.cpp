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

#include "spin/dilation.hpp"

#include <cmath>

#include "spin/order_iso.hpp"

namespace spin {

Dilation dilate_triple(const SpinTuple& t) {
  const CpMap cp = choi_of_triple_map(t);
  const std::size_t d = t.dim;
  const std::size_t ell = cp.kraus.size();

  // V xi = sum_k (A_k* xi) (x) e_k, Pauli factor first.
  CMatrix v(2 * ell, d);
  for (std::size_t k = 0; k < ell; ++k) {
    const CMatrix a_adj = cp.kraus[k].adjoint();  // 2 x d
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t c = 0; c < d; ++c) v(a * ell + k, c) = a_adj(a, c);
  }

  Dilation out;
  out.ell = ell;
  out.isometry = v;
  out.isometry_residual = (v.adjoint() * v - CMatrix::identity(d)).frobenius_norm();
  const CMatrix idl = CMatrix::identity(ell);
  const CMatrix sigmas[3] = {pauli_x(), pauli_y(), pauli_z()};
  for (int j = 0; j < 3; ++j) {
    const CMatrix compressed = v.adjoint() * kron(sigmas[j], idl) * v;
    out.residuals.push_back((compressed - t.unitaries[j]).frobenius_norm());
  }
  return out;
}

Dilation reverse_dilate(const SpinTuple& t) {
  const CpMap cp = choi_of_triple_map(t);
  const std::size_t d = t.dim;
  const std::size_t ell = cp.kraus.size();
  const double root = std::sqrt(2.0 / static_cast<double>(d));

  // Kraus factors of the inverse map psi(z) = (2/d) sum_k A_k* z A_k.
  std::vector<CMatrix> b;
  b.reserve(ell);
  for (const auto& a : cp.kraus) b.push_back(root * a.adjoint());  // 2 x d

  // V eta = sum_k (B_k* eta) (x) e_k, target ordered C^d (x) C^ell.
  CMatrix v(d * ell, 2);
  for (std::size_t k = 0; k < ell; ++k) {
    const CMatrix b_adj = b[k].adjoint();  // d x 2
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < 2; ++c) v(r * ell + k, c) = b_adj(r, c);
  }

  Dilation out;
  out.ell = ell;
  out.isometry = v;
  out.isometry_residual = (v.adjoint() * v - CMatrix::identity(2)).frobenius_norm();
  const CMatrix idl = CMatrix::identity(ell);
  const CMatrix sigmas[3] = {pauli_x(), pauli_y(), pauli_z()};
  for (int j = 0; j < 3; ++j) {
    const CMatrix compressed = v.adjoint() * kron(t.unitaries[j], idl) * v;
    out.residuals.push_back((compressed - sigmas[j]).frobenius_norm());
  }
  return out;
}

}  // namespace spin
