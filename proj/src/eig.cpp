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

#include "spin/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spin {

namespace {

double offdiag_norm(const CMatrix& m) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing m(p, q). The rotation is the product
// of the phase diag(1, e^{-i phi}) and a real Givens rotation, applied to
// rows/columns p and q of m and accumulated into the eigenvector matrix v.
void rotate(CMatrix& m, CMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = m(p, q);
  const double abs_apq = std::abs(apq);
  if (abs_apq == 0.0) return;
  const cplx phase = apq / abs_apq;  // e^{i phi}

  const double app = m(p, p).real();
  const double aqq = m(q, q).real();
  const double tau = (aqq - app) / (2.0 * abs_apq);
  const double sign = tau >= 0.0 ? 1.0 : -1.0;
  const double t = sign / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  // U restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
  const cplx upp(c, 0.0);
  const cplx upq(s, 0.0);
  const cplx uqp = -s * std::conj(phase);
  const cplx uqq = c * std::conj(phase);

  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {  // m <- m U
    const cplx mp = m(i, p), mq = m(i, q);
    m(i, p) = mp * upp + mq * uqp;
    m(i, q) = mp * upq + mq * uqq;
  }
  for (std::size_t j = 0; j < n; ++j) {  // m <- U* m
    const cplx rp = m(p, j), rq = m(q, j);
    m(p, j) = std::conj(upp) * rp + std::conj(uqp) * rq;
    m(q, j) = std::conj(upq) * rp + std::conj(uqq) * rq;
  }
  for (std::size_t i = 0; i < n; ++i) {  // v <- v U
    const cplx vp = v(i, p), vq = v(i, q);
    v(i, p) = vp * upp + vq * uqp;
    v(i, q) = vp * upq + vq * uqq;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const CMatrix& a, double tol) {
  if (!a.is_square()) throw ShapeMismatch("hermitian_eig: matrix not square");
  const std::size_t n = a.rows();
  const double scale = std::max(1.0, a.frobenius_norm());
  if ((a - a.adjoint()).frobenius_norm() > tol * scale)
    throw NotHermitian("hermitian_eig: input is not Hermitian within tolerance");

  CMatrix m = 0.5 * (a + a.adjoint());
  CMatrix v = CMatrix::identity(n);
  const double norm_a = m.frobenius_norm();
  const double target = 1e-13 * norm_a;
  const double skip = n > 0 ? target / (10.0 * static_cast<double>(n)) : 0.0;

  bool converged = norm_a == 0.0 || n < 2;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    if (offdiag_norm(m) <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(m(p, q)) > skip) rotate(m, v, p, q);
    m = 0.5 * (m + m.adjoint());  // keep rounding drift Hermitian
  }
  if (!converged && offdiag_norm(m) > target)
    throw NoConvergence("hermitian_eig: Jacobi sweep cap reached");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return m(i, i).real() < m(j, j).real(); });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = m(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

PsdVerdict is_psd(const CMatrix& a, double tol) {
  if (!a.is_square()) throw ShapeMismatch("is_psd: matrix not square");
  const double scale = std::max(1.0, a.frobenius_norm());
  if ((a - a.adjoint()).frobenius_norm() > tol * scale)
    throw NotHermitian("is_psd: input is not Hermitian within tolerance");
  const auto eig = hermitian_eig(0.5 * (a + a.adjoint()), 1.0);
  const double min_eig = eig.values.empty() ? 0.0 : eig.values.front();
  return {min_eig >= -tol * scale, min_eig};
}

double operator_norm(const CMatrix& x) {
  if (x.empty()) return 0.0;
  const CMatrix g = x.adjoint() * x;
  const auto eig = hermitian_eig(g, 1e-8);
  return std::sqrt(std::max(0.0, eig.values.back()));
}

double min_eigenvalue_hermitian(const CMatrix& a, double tol) {
  return hermitian_eig(a, tol).values.front();
}

double max_eigenvalue_hermitian(const CMatrix& a, double tol) {
  return hermitian_eig(a, tol).values.back();
}

std::optional<CMatrix> unitary_polar_factor(const CMatrix& z) {
  if (!z.is_square()) throw ShapeMismatch("unitary_polar_factor: matrix not square");
  const CMatrix g = z.adjoint() * z;
  const auto eig = hermitian_eig(g, 1e-8);
  const double lmax = eig.values.back();
  if (lmax <= 0.0 || eig.values.front() <= 1e-10 * lmax) return std::nullopt;

  CMatrix inv_sqrt(z.rows(), z.rows());
  for (std::size_t k = 0; k < z.rows(); ++k) {
    const double w = 1.0 / std::sqrt(eig.values[k]);
    for (std::size_t i = 0; i < z.rows(); ++i)
      for (std::size_t j = 0; j < z.rows(); ++j)
        inv_sqrt(i, j) += w * eig.vectors(i, k) * std::conj(eig.vectors(j, k));
  }
  CMatrix q = z * inv_sqrt;
  if ((q.adjoint() * q - CMatrix::identity(q.rows())).frobenius_norm() > 1e-8)
    return std::nullopt;
  return q;
}

std::vector<std::vector<cplx>> hermitian_nullspace(const CMatrix& g, double rel_tol) {
  const auto eig = hermitian_eig(g, 1e-8);
  const double lmax = eig.values.empty() ? 0.0 : std::max(0.0, eig.values.back());
  const double cut = rel_tol * std::max(lmax, 1e-300);
  std::vector<std::vector<cplx>> basis;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (std::abs(eig.values[k]) <= cut) {
      std::vector<cplx> v(g.rows());
      for (std::size_t i = 0; i < g.rows(); ++i) v[i] = eig.vectors(i, k);
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

}  // namespace spin
