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

#include "spin/spectrahedra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spin/random.hpp"

namespace spin {

void SelfadjointTuple::validate() const {
  for (std::size_t j = 0; j < mats.size(); ++j) {
    const CMatrix& h = mats[j];
    if (h.rows() != level || h.cols() != level)
      throw ShapeMismatch("SelfadjointTuple: entry " + std::to_string(j) +
                          " is not level x level");
    if ((h - h.adjoint()).frobenius_norm() > 1e-10 * std::max(1.0, h.frobenius_norm()))
      throw NotHermitian("SelfadjointTuple: entry " + std::to_string(j) + " is not Hermitian");
  }
}

CMatrix pencil_value(const SelfadjointTuple& a, const SelfadjointTuple& h) {
  if (a.arity() != h.arity()) throw ArityMismatch("pencil_value: arities differ");
  a.validate();
  h.validate();
  CMatrix acc = CMatrix::identity(h.level * a.level);
  for (std::size_t j = 0; j < h.arity(); ++j) acc -= kron(h.mats[j], a.mats[j]);
  return acc;
}

PsdVerdict in_spectrahedron(const SelfadjointTuple& a, const SelfadjointTuple& h, double tol) {
  return is_psd(pencil_value(a, h), tol);
}

PsdVerdict in_spin_ball(std::size_t m, const SelfadjointTuple& h, double tol) {
  if (h.arity() != m) throw ArityMismatch("in_spin_ball: tuple arity does not match m");
  if (m < 1) throw BadArity("in_spin_ball: m must be >= 1");
  SelfadjointTuple a;
  if (m == 1) {
    a.level = 2;
    a.mats = {pauli_z()};  // any non-scalar selfadjoint unitary gives the same ball
  } else {
    const SpinTuple s = canonical_spin(m);
    a.level = s.dim;
    a.mats = s.unitaries;
  }
  return in_spectrahedron(a, h, tol);
}

namespace {

double half_real_part_max_eig(const CMatrix& y, double theta) {
  const cplx phase(std::cos(theta), std::sin(theta));
  const CMatrix re = 0.5 * (phase * y + std::conj(phase) * y.adjoint());
  return max_eigenvalue_hermitian(re, 1e-6);
}

}  // namespace

double numerical_radius(const CMatrix& y, std::size_t grid) {
  if (!y.is_square()) throw ShapeMismatch("numerical_radius: matrix not square");
  if (grid < 8) grid = 8;
  double best = -1e300;
  double best_theta = 0.0;
  for (std::size_t k = 0; k < grid; ++k) {
    const double th = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(grid);
    const double val = half_real_part_max_eig(y, th);
    if (val > best) {
      best = val;
      best_theta = th;
    }
  }

  // Golden-section refinement around the best grid point; the coarse grid
  // guards against picking the wrong local peak.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_theta - 2.0 * M_PI / static_cast<double>(grid);
  double hi = best_theta + 2.0 * M_PI / static_cast<double>(grid);
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = half_real_part_max_eig(y, x1);
  double f2 = half_real_part_max_eig(y, x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = half_real_part_max_eig(y, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = half_real_part_max_eig(y, x1);
    }
    best = std::max(best, std::max(f1, f2));
  }
  return best;
}

std::vector<std::vector<double>> joint_numerical_range_sample(const std::vector<CMatrix>& xs,
                                                              std::size_t samples,
                                                              std::uint64_t seed) {
  if (xs.empty()) throw ShapeMismatch("joint_numerical_range_sample: empty tuple");
  const std::size_t d = xs.front().rows();
  for (const auto& x : xs)
    if (x.rows() != d || x.cols() != d)
      throw ShapeMismatch("joint_numerical_range_sample: mixed shapes");

  std::vector<std::vector<double>> out(samples);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(samples); ++k) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
    const auto xi = rng.unit_vector(d);
    std::vector<double> point(xs.size());
    for (std::size_t t = 0; t < xs.size(); ++t) {
      cplx val = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        cplx row = 0.0;
        for (std::size_t j = 0; j < d; ++j) row += xs[t](i, j) * xi[j];
        val += std::conj(xi[i]) * row;
      }
      point[t] = val.real();
    }
    out[static_cast<std::size_t>(k)] = std::move(point);
  }
  return out;
}

namespace {

// Projection onto the affine set of Hermitian 2l x 2l matrices with
// off-diagonal blocks pinned to y, y* and diagonal blocks summing to 1.
CMatrix project_affine(const CMatrix& z, const CMatrix& y) {
  const std::size_t l = y.rows();
  CMatrix b = 0.5 * (z.block(0, 0, l, l) - z.block(l, l, l, l) + CMatrix::identity(l));
  b = 0.5 * (b + b.adjoint());
  CMatrix out(2 * l, 2 * l);
  out.set_block(0, 0, b);
  out.set_block(0, l, y);
  out.set_block(l, 0, y.adjoint());
  out.set_block(l, l, CMatrix::identity(l) - b);
  return out;
}

CMatrix project_psd(const CMatrix& z) {
  const auto eig = hermitian_eig(0.5 * (z + z.adjoint()), 1.0);
  const std::size_t n = z.rows();
  CMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = eig.values[k];
    if (lam <= 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = eig.vectors(i, k);
      if (vik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += lam * vik * std::conj(eig.vectors(j, k));
    }
  }
  return 0.5 * (out + out.adjoint());
}

double negative_part_norm(const CMatrix& z) {
  const auto eig = hermitian_eig(0.5 * (z + z.adjoint()), 1.0);
  double s = 0.0;
  for (double lam : eig.values)
    if (lam < 0.0) s += lam * lam;
  return std::sqrt(s);
}

}  // namespace

std::optional<AndoCertificate> ando_certificate(const CMatrix& a1, const CMatrix& a2,
                                                std::size_t max_iter) {
  if (!a1.is_square() || a1.rows() != a2.rows() || a2.rows() != a2.cols())
    throw ShapeMismatch("ando_certificate: inputs must be square of equal size");
  const double s1 = std::max(1.0, a1.frobenius_norm());
  const double s2 = std::max(1.0, a2.frobenius_norm());
  if ((a1 - a1.adjoint()).frobenius_norm() > 1e-10 * s1 ||
      (a2 - a2.adjoint()).frobenius_norm() > 1e-10 * s2)
    throw NotHermitian("ando_certificate: inputs must be Hermitian");

  const std::size_t l = a1.rows();
  const CMatrix y = 0.5 * (a1 + cplx(0.0, 1.0) * a2);
  const double converge_tol = 1e-7;
  const double infeasible_tol = 1e-6;

  // Dykstra between the affine slice and the PSD cone. The final iterate
  // lives in the affine set, so its distance to the cone is the residual.
  CMatrix x = project_affine(CMatrix(2 * l, 2 * l), y);
  CMatrix p(2 * l, 2 * l), q(2 * l, 2 * l);
  double residual = negative_part_norm(x);
  std::size_t iter = 0;
  while (residual > converge_tol && iter < max_iter) {
    ++iter;
    const CMatrix xp = x + p;
    const CMatrix ycone = project_psd(xp);
    p = xp - ycone;
    const CMatrix yq = ycone + q;
    x = project_affine(yq, y);
    q = yq - x;
    residual = negative_part_norm(x);
  }

  if (residual > infeasible_tol) return std::nullopt;
  AndoCertificate cert;
  cert.b = x.block(0, 0, l, l);
  cert.feasibility_residual = residual;
  cert.iterations = iter;
  return cert;
}

MaxBallReport maxball_check_m2(const SelfadjointTuple& h,
                               const std::vector<SelfadjointTuple>& trials,
                               std::size_t ando_max_iter) {
  if (h.arity() != 2) throw ArityMismatch("maxball_check_m2: h must be a pair");
  MaxBallReport rep;
  const PsdVerdict ball = in_spin_ball(2, h);
  rep.in_spin_ball = ball.psd;
  rep.spin_ball_min_eig = ball.min_eig;

  for (const auto& a : trials) {
    if (a.arity() != 2) throw ArityMismatch("maxball_check_m2: trials must be pairs");
    a.validate();
    MaxBallTrial tr;
    // Certification is w(a1 + i a2) <= 1, equivalently w(y) <= 1/2 for
    // y = (a1 + i a2)/2: exactly the condition that the scalar joint
    // numerical range of (a1, a2) sits inside the unit disc, and exactly
    // the feasibility range of the block witness below.
    tr.radius = numerical_radius(a.mats[0] + cplx(0.0, 1.0) * a.mats[1]);
    tr.certified = tr.radius <= 1.0 + 1e-9;
    if (tr.certified) {
      const auto cert = ando_certificate(a.mats[0], a.mats[1], ando_max_iter);
      tr.ando_feasible = cert.has_value();
      if (cert) tr.certificate_residual = cert->feasibility_residual;
      const CMatrix transferred = pencil_value(a, h);
      const auto verdict = is_psd(transferred, 1e-7);
      tr.transfer_min_eig = verdict.min_eig;
      tr.transferred_psd = verdict.psd;
      if (rep.in_spin_ball && !tr.transferred_psd) rep.violation = true;
    }
    rep.trials.push_back(tr);
  }
  return rep;
}

ConvexityReport matrix_convexity_probe(const SelfadjointTuple& a,
                                       const std::vector<SelfadjointTuple>& members,
                                       const std::vector<CMatrix>& isometries) {
  if (members.empty() || members.size() != isometries.size())
    throw ShapeMismatch("matrix_convexity_probe: members and maps must pair up");
  const std::size_t m = a.arity();
  const std::size_t n = isometries.front().cols();

  CMatrix partition(n, n);
  for (std::size_t l = 0; l < members.size(); ++l) {
    if (members[l].arity() != m)
      throw ArityMismatch("matrix_convexity_probe: member arity mismatch");
    const CMatrix& g = isometries[l];
    if (g.cols() != n || g.rows() != members[l].level)
      throw ShapeMismatch("matrix_convexity_probe: map " + std::to_string(l) +
                          " has inconsistent shape");
    partition += g.adjoint() * g;
  }
  ConvexityReport rep;
  rep.partition_residual = (partition - CMatrix::identity(n)).frobenius_norm();
  if (rep.partition_residual > 1e-9)
    throw PartitionOfUnityViolated("matrix_convexity_probe: sum gamma* gamma != 1");

  for (const auto& member : members) rep.member_verdicts.push_back(in_spectrahedron(a, member));

  SelfadjointTuple combined;
  combined.level = n;
  for (std::size_t j = 0; j < m; ++j) {
    CMatrix acc(n, n);
    for (std::size_t l = 0; l < members.size(); ++l)
      acc += isometries[l].adjoint() * members[l].mats[j] * isometries[l];
    combined.mats.push_back(0.5 * (acc + acc.adjoint()));
  }
  rep.combined = in_spectrahedron(a, combined);
  return rep;
}

bool matrix_range_membership_single(std::size_t u_dim, const CMatrix& h, double tol) {
  if (u_dim < 2) throw BadInput("matrix_range_membership_single: unitary dimension must be >= 2");
  if (!h.is_square()) throw ShapeMismatch("matrix_range_membership_single: h not square");
  if ((h - h.adjoint()).frobenius_norm() > 1e-10 * std::max(1.0, h.frobenius_norm()))
    throw NotHermitian("matrix_range_membership_single: h not Hermitian");
  const CMatrix id = CMatrix::identity(h.rows());
  return is_psd(id + h, tol).psd && is_psd(id - h, tol).psd;
}

}  // namespace spin
