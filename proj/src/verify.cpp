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

#include "spin/verify.hpp"

#include <algorithm>
#include <cmath>

#include "spin/eig.hpp"

namespace spin {

bool VerifyReport::all_ok(double tol) const {
  if (!dim_parity_ok || !independent) return false;
  if (selfadjoint_residual > tol || unitarity_residual > tol || anticommute_residual > tol)
    return false;
  for (double t : traces)
    if (t > tol) return false;
  for (double h : pairwise_hs)
    if (h > tol) return false;
  return true;
}

VerifyReport verify_spin(const SpinTuple& s, double tol) {
  VerifyReport r;
  r.dim_parity_ok = (s.dim % 2 == 0) && s.dim > 0;
  const std::size_t m = s.arity();
  if (m == 0) {
    r.independent = true;
    r.gram_min_eig = static_cast<double>(s.dim);
    return r;
  }
  const CMatrix id = CMatrix::identity(s.dim);
  for (const auto& u : s.unitaries) {
    r.selfadjoint_residual = std::max(r.selfadjoint_residual, (u - u.adjoint()).frobenius_norm());
    r.unitarity_residual = std::max(r.unitarity_residual, (u * u - id).frobenius_norm());
    r.traces.push_back(std::abs(u.trace()));
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const CMatrix anti = s.unitaries[i] * s.unitaries[j] + s.unitaries[j] * s.unitaries[i];
      r.anticommute_residual = std::max(r.anticommute_residual, anti.frobenius_norm());
      r.pairwise_hs.push_back(std::abs(hs_inner(s.unitaries[i], s.unitaries[j])));
    }

  // Gram matrix of {1, u_1, ..., u_m}; linear independence is a strictly
  // positive minimum eigenvalue.
  std::vector<const CMatrix*> basis;
  basis.push_back(&id);
  for (const auto& u : s.unitaries) basis.push_back(&u);
  CMatrix gram(m + 1, m + 1);
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j <= m; ++j) gram(i, j) = hs_inner(*basis[i], *basis[j]);
  r.gram_min_eig = min_eigenvalue_hermitian(gram, 1e-8);
  r.independent = r.gram_min_eig > tol;
  return r;
}

CommutantResult commutant_dim(const std::vector<CMatrix>& xs, std::size_t dim_hint) {
  std::size_t d = dim_hint;
  if (!xs.empty()) d = xs.front().rows();
  if (d == 0) throw ShapeMismatch("commutant_dim: dimension unknown (empty list, no hint)");
  for (const auto& x : xs)
    if (x.rows() != d || x.cols() != d) throw ShapeMismatch("commutant_dim: mixed shapes");

  CommutantResult out;
  if (xs.empty()) {
    out.dim = d * d;
    const double inv = 1.0;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) {
        CMatrix e(d, d);
        e(i, j) = inv;
        out.basis.push_back(std::move(e));
      }
    return out;
  }

  // Joint null space of z -> z x_j - x_j z through column vectorisation:
  // K_j = x_j^T (x) 1 - 1 (x) x_j.
  const CMatrix id = CMatrix::identity(d);
  CMatrix g(d * d, d * d);
  for (const auto& x : xs) {
    const CMatrix k = kron(x.transpose(), id) - kron(id, x);
    g += k.adjoint() * k;
  }
  const auto null = hermitian_nullspace(g, 1e-9);
  out.dim = null.size();
  out.basis.reserve(null.size());
  for (const auto& v : null) out.basis.push_back(unvec_columns(v, d, d));
  return out;
}

bool is_irreducible(const SpinTuple& s) {
  s.validate();
  return commutant_dim(s.unitaries, s.dim).dim == 1;
}

namespace {

// Flattened matrices as HS vectors; modified Gram-Schmidt with one
// re-orthogonalisation pass against the running orthonormal basis.
// Returns true (and appends) when the candidate adds a new direction.
bool mgs_adjoin(std::vector<std::vector<cplx>>& basis, std::vector<cplx> v, double rel_tol) {
  double norm0 = 0.0;
  for (const auto& x : v) norm0 += std::norm(x);
  norm0 = std::sqrt(norm0);
  if (norm0 == 0.0) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) proj += std::conj(b[i]) * v[i];
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= proj * b[i];
    }
  }
  double rem = 0.0;
  for (const auto& x : v) rem += std::norm(x);
  rem = std::sqrt(rem);
  if (rem <= rel_tol * norm0) return false;
  const double inv = 1.0 / rem;
  for (auto& x : v) x *= inv;
  basis.push_back(std::move(v));
  return true;
}

}  // namespace

std::size_t algebra_dim(const std::vector<CMatrix>& xs, std::size_t cap) {
  if (xs.empty()) throw ShapeMismatch("algebra_dim: empty generator list");
  const std::size_t d = xs.front().rows();
  for (const auto& x : xs)
    if (x.rows() != d || x.cols() != d) throw ShapeMismatch("algebra_dim: mixed shapes");

  const double rel_tol = 1e-9;
  std::vector<std::vector<cplx>> basis;        // orthonormal HS vectors
  std::vector<CMatrix> members;                // same elements as matrices
  auto adjoin = [&](const CMatrix& m) {
    if (mgs_adjoin(basis, std::vector<cplx>(m.data()), rel_tol)) {
      members.push_back(m);
      return true;
    }
    return false;
  };

  adjoin(CMatrix::identity(d));
  for (const auto& x : xs) {
    adjoin(x);
    adjoin(x.adjoint());
  }

  // Close under products; only pairs touching the last round's additions can
  // produce anything new.
  std::size_t frontier_begin = 0;
  for (std::size_t round = 0; round < cap; ++round) {
    const std::size_t n = members.size();
    std::vector<CMatrix> fresh;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = (i >= frontier_begin ? 0 : frontier_begin); j < n; ++j)
        fresh.push_back(members[i] * members[j]);
    frontier_begin = n;
    bool grew = false;
    for (const auto& p : fresh) grew |= adjoin(p);
    if (!grew) return members.size();
    if (members.size() == d * d) return members.size();  // full algebra, fixpoint
  }
  throw CapExceeded("algebra_dim: closure did not stabilise within the round cap");
}

double envelope_product_identity(std::size_t k) {
  if (k < 1) throw BadInput("envelope_product_identity: k must be >= 1");
  const SpinTuple s = canonical_spin(2 * k);
  CMatrix prod = CMatrix::identity(s.dim);
  for (std::size_t j = 0; j < k; ++j) prod = prod * (s.unitaries[2 * j] * s.unitaries[2 * j + 1]);

  CMatrix target{{1.0}};
  for (std::size_t j = 0; j < k; ++j) target = kron(target, pauli_z());

  // i^{-k} cycles with period 4
  static const cplx table[4] = {cplx(1, 0), cplx(0, -1), cplx(-1, 0), cplx(0, 1)};
  const cplx phase = table[k % 4];
  return (target - phase * prod).frobenius_norm();
}

std::optional<CMatrix> intertwiner(const SpinTuple& u, const SpinTuple& v) {
  if (u.dim != v.dim) throw ShapeMismatch("intertwiner: ambient dimensions differ");
  if (u.arity() != v.arity()) throw ShapeMismatch("intertwiner: arities differ");
  const std::size_t d = u.dim;
  const CMatrix id = CMatrix::identity(d);

  // z u_j - v_j z = 0 vectorises to (u_j^T (x) 1 - 1 (x) v_j) vec(z) = 0.
  CMatrix g(d * d, d * d);
  for (std::size_t j = 0; j < u.arity(); ++j) {
    const CMatrix k = kron(u.unitaries[j].transpose(), id) - kron(id, v.unitaries[j]);
    g += k.adjoint() * k;
  }
  const auto null = hermitian_nullspace(g, 1e-9);
  if (null.empty()) return std::nullopt;

  const CMatrix z = unvec_columns(null.front(), d, d);
  auto q = unitary_polar_factor(z);
  if (!q) return std::nullopt;
  double resid = 0.0;
  for (std::size_t j = 0; j < u.arity(); ++j)
    resid = std::max(resid, (*q * u.unitaries[j] - v.unitaries[j] * *q).frobenius_norm());
  if (resid > 1e-8 * std::sqrt(static_cast<double>(d))) return std::nullopt;
  return q;
}

}  // namespace spin
