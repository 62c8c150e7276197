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

#include "spin/pairs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "spin/eig.hpp"
#include "spin/random.hpp"

namespace spin {

PairCanonicalForm canonicalize_pair(const CMatrix& u, const CMatrix& v) {
  SpinTuple pair{u.rows(), {u, v}};
  pair.validate();
  const std::size_t d = u.rows();
  const std::size_t n = d / 2;

  // Eigenbasis of u with the +1 eigenvectors first; any orthonormal choice
  // inside the two eigenspaces is acceptable.
  const auto eig = hermitian_eig(u, 1e-8);
  std::size_t plus = 0;
  for (double lam : eig.values)
    if (lam > 0.0) ++plus;
  if (plus != n)
    throw InvariantViolation("canonicalize_pair: eigenvalues of u are not balanced (trace != 0)");

  CMatrix basis(d, d);  // columns: +1 eigenvectors then -1 eigenvectors
  std::size_t col = 0;
  for (std::size_t k = 0; k < d; ++k)
    if (eig.values[k] > 0.0) {
      for (std::size_t i = 0; i < d; ++i) basis(i, col) = eig.vectors(i, k);
      ++col;
    }
  for (std::size_t k = 0; k < d; ++k)
    if (eig.values[k] <= 0.0) {
      for (std::size_t i = 0; i < d; ++i) basis(i, col) = eig.vectors(i, k);
      ++col;
    }

  PairCanonicalForm out;
  out.n = n;
  out.y = basis.adjoint();
  const CMatrix tv = out.y * v * out.y.adjoint();
  const double diag_leak =
      std::max(tv.block(0, 0, n, n).frobenius_norm(), tv.block(n, n, n, n).frobenius_norm());
  if (diag_leak > 1e-8)
    throw InvariantViolation("canonicalize_pair: diagonal blocks of y v y* are not zero");
  out.w = tv.block(0, n, n, n);
  return out;
}

XAnalysis analyze_x(const CMatrix& u, const CMatrix& v) {
  const PairCanonicalForm form = canonicalize_pair(u, v);
  const std::size_t n = form.n;
  const std::size_t d = 2 * n;
  const CMatrix x = u + cplx(0.0, 1.0) * v;

  XAnalysis out;
  out.norm = operator_norm(x);
  out.nilpotency_residual = (x * x).frobenius_norm();

  // Block unitary sqrt(1/2) [[1, -1], [i w*, i w*]] in the canonical basis,
  // pulled back through y.
  const double r = std::sqrt(0.5);
  const cplx ir(0.0, r);
  CMatrix hb(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    hb(i, i) = r;
    hb(i, n + i) = -r;
  }
  const CMatrix wadj = form.w.adjoint();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      hb(n + i, j) = ir * wadj(i, j);
      hb(n + i, n + j) = ir * wadj(i, j);
    }
  const CMatrix h = form.y.adjoint() * hb;
  out.h_unitarity_residual = (h.adjoint() * h - CMatrix::identity(d)).frobenius_norm();

  const CMatrix pre = h.adjoint() * x * h;
  CMatrix pre_expected(d, d);  // [[0, -2 1_n], [0, 0]]
  for (std::size_t i = 0; i < n; ++i) pre_expected(i, n + i) = -2.0;
  out.preshuffle_residual = (pre - pre_expected).frobenius_norm();

  // Sign flip, then interleave the two halves so that block i becomes the
  // i-th 2 x 2 diagonal block.
  CMatrix flip(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    flip(i, i) = 1.0;
    flip(n + i, n + i) = -1.0;
  }
  std::vector<std::size_t> shuffle(d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 2; ++a) shuffle[2 * i + a] = a * n + i;

  const CMatrix flipped = flip * pre * flip;
  const CMatrix final_form = permute_conjugate(flipped, shuffle);
  CMatrix expected(d, d);  // (+)_1^n [[0, 2], [0, 0]]
  for (std::size_t i = 0; i < n; ++i) expected(2 * i, 2 * i + 1) = 2.0;
  out.reduction_residual = (final_form - expected).frobenius_norm();

  out.reduction.h = h;
  out.reduction.shuffle = std::move(shuffle);
  out.reduction.block_count = n;
  return out;
}

DiscSampleReport disc_numerical_range_check(const CMatrix& x, std::size_t samples,
                                            std::uint64_t seed) {
  if (!x.is_square()) throw ShapeMismatch("disc_numerical_range_check: matrix not square");
  const std::size_t d = x.rows();
  std::vector<cplx> points(samples);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(samples); ++k) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
    const auto xi = rng.unit_vector(d);
    cplx val = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      cplx row = 0.0;
      for (std::size_t j = 0; j < d; ++j) row += x(i, j) * xi[j];
      val += std::conj(xi[i]) * row;
    }
    points[static_cast<std::size_t>(k)] = val;
  }

  DiscSampleReport rep;
  for (const auto& p : points) rep.max_abs = std::max(rep.max_abs, std::abs(p));

  // Support-function comparison on an angular grid: for convex sets the
  // Hausdorff distance equals the sup of support differences, and the hull
  // of the samples shares its support function with the sample set.
  const double step = 0.05;
  const std::size_t ndir = static_cast<std::size_t>(std::ceil(2.0 * M_PI / step));
  double gap = 0.0;
  for (std::size_t k = 0; k < ndir; ++k) {
    const double th = (2.0 * M_PI * static_cast<double>(k)) / static_cast<double>(ndir);
    const double cx = std::cos(th), sy = std::sin(th);
    double support = -1e300;
    for (const auto& p : points) support = std::max(support, p.real() * cx + p.imag() * sy);
    gap = std::max(gap, 1.0 - support);
  }
  rep.coverage_gap = std::max(0.0, gap);
  return rep;
}

}  // namespace spin
