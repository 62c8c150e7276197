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

#include <optional>
#include <vector>

#include "spin/construct.hpp"
#include "spin/matrix.hpp"

namespace spin {

/// Numerical audit of the spin axioms for a raw tuple. Pure function of the
/// input; failures are reported, never thrown.
struct VerifyReport {
  double selfadjoint_residual = 0.0;   // max_j ||u_j - u_j*||_F
  double unitarity_residual = 0.0;     // max_j ||u_j^2 - 1||_F
  double anticommute_residual = 0.0;   // max_{i<j} ||u_i u_j + u_j u_i||_F
  std::vector<double> traces;          // |tr u_j|
  std::vector<double> pairwise_hs;     // |tr(u_i u_j)|, i < j
  bool independent = false;            // Gram of {1, u_1, ..., u_m} nonsingular
  bool dim_parity_ok = false;
  double gram_min_eig = 0.0;

  bool all_ok(double tol = 1e-9) const;
};

VerifyReport verify_spin(const SpinTuple& s, double tol = 1e-9);

struct CommutantResult {
  std::size_t dim = 0;
  std::vector<CMatrix> basis;  // orthonormal under the HS inner product
};

/// Commutant {z : z x_j = x_j z for all j}, computed as the joint null space
/// of the vectorised commutator maps. dim_hint is required when xs is empty.
CommutantResult commutant_dim(const std::vector<CMatrix>& xs, std::size_t dim_hint = 0);

bool is_irreducible(const SpinTuple& s);

/// Dimension of the unital *-algebra generated by xs: close the span of
/// {1, x_j, x_j*} under pairwise products, re-orthonormalising as it grows.
/// Throws CapExceeded when no fixpoint is reached within cap rounds.
std::size_t algebra_dim(const std::vector<CMatrix>& xs, std::size_t cap = 16);

/// || kron-power of sigma_Z over k factors - i^{-k} prod_j w_{2j-1} w_{2j} ||_F
/// with the w_i the canonical 2k-tuple in construction order.
double envelope_product_identity(std::size_t k);

/// A unitary q with q u_j = v_j q for all j, when one exists; recovered from
/// the joint null space of the vectorised intertwining equations via the
/// unitary polar factor. Empty when the null space is zero or the polar
/// factor fails to be unitary (reducible inputs).
std::optional<CMatrix> intertwiner(const SpinTuple& u, const SpinTuple& v);

}  // namespace spin
