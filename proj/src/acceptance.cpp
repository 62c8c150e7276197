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

#include "spin/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "spin/construct.hpp"
#include "spin/dilation.hpp"
#include "spin/eig.hpp"
#include "spin/matrix.hpp"
#include "spin/order_iso.hpp"
#include "spin/pairs.hpp"
#include "spin/random.hpp"
#include "spin/spectrahedra.hpp"
#include "spin/verify.hpp"

namespace spin {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c, d);
  return buf;
}

SpinTuple random_spin_pair(std::size_t d, std::uint64_t seed) {
  const std::size_t n = d / 2;
  return pair_from_witness(n, haar_unitary(n, mix_seed(seed, 1)),
                           haar_unitary(d, mix_seed(seed, 2)));
}

// Random triple from the class the triple map machinery covers: conjugated
// amplifications of the Pauli triple (ordered product u v w = i 1).
// Chirality-flipped triples satisfy the spin axioms but are not completely
// order equivalent to the Pauli triple; they are exercised separately.
SpinTuple random_spin_triple(std::size_t d, std::uint64_t seed) {
  const std::size_t l = d / 2;
  return conjugate(inflate(pauli(), l), haar_unitary(d, mix_seed(seed, 4)));
}

CriterionResult c01_spin_axioms(const AcceptanceConfig& cfg) {
  const std::size_t derived = cfg.quick ? 4 : 20;
  double worst_residual = 0.0, worst_trace = 0.0, worst_gram = 1e300;
  bool ok = true;
  for (std::size_t m = 2; m <= 9; ++m) {
    const SpinTuple canonical = canonical_spin(m);
    std::vector<SpinTuple> tuples{canonical};
    for (std::size_t i = 0; i < derived; ++i) {
      const std::uint64_t s = mix_seed(cfg.seed, 100 * m + i);
      if (i % 2 == 0) {
        tuples.push_back(conjugate(canonical, haar_unitary(canonical.dim, s)));
      } else {
        const SpinTuple big = inflate(canonical, 2);
        tuples.push_back(conjugate(big, haar_unitary(big.dim, s)));
      }
    }
    for (const auto& t : tuples) {
      const VerifyReport r = verify_spin(t, 1e-9);
      const double res = std::max({r.selfadjoint_residual, r.unitarity_residual,
                                   r.anticommute_residual});
      worst_residual = std::max(worst_residual, res);
      for (double tr : r.traces) worst_trace = std::max(worst_trace, tr);
      for (double h : r.pairwise_hs) worst_trace = std::max(worst_trace, h);
      worst_gram = std::min(worst_gram, r.gram_min_eig);
      ok = ok && r.dim_parity_ok && r.independent && res <= 1e-9;
    }
  }
  ok = ok && worst_trace <= 1e-9 && worst_gram > 1e-6;
  return {"c01_spin_axioms", ok,
          fmt("max residual %.2e, max trace/hs %.2e, min gram eig %.2e", worst_residual,
              worst_trace, worst_gram)};
}

CriterionResult c02_pair_canonical_form(const AcceptanceConfig& cfg) {
  const std::size_t count = cfg.quick ? 12 : 50;
  const std::size_t dims[4] = {2, 4, 6, 8};
  double worst_form = 0.0, worst_norm = 0.0, worst_nil = 0.0, worst_red = 0.0, worst_spec = 0.0;
  bool ok = true;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t d = dims[t % 4];
    const std::uint64_t s = mix_seed(cfg.seed, 2000 + t);
    SpinTuple pair;
    switch (t % 3) {
      case 0:
        pair = random_spin_pair(d, s);
        break;
      case 1: {  // conjugated amplification of the Pauli pair
        SpinTuple p{2, {pauli_x(), pauli_y()}};
        pair = conjugate(inflate(p, d / 2), haar_unitary(d, s));
        break;
      }
      default:
        pair = conjugate(random_spin_pair(d, s), haar_unitary(d, mix_seed(s, 9)));
    }
    const CMatrix& u = pair.unitaries[0];
    const CMatrix& v = pair.unitaries[1];
    const std::size_t n = d / 2;

    const PairCanonicalForm f = canonicalize_pair(u, v);
    CMatrix su(d, d);
    for (std::size_t i = 0; i < n; ++i) {
      su(i, i) = 1.0;
      su(n + i, n + i) = -1.0;
    }
    CMatrix sv(d, d);
    sv.set_block(0, n, f.w);
    sv.set_block(n, 0, f.w.adjoint());
    const double form_res =
        std::max({(f.y * u * f.y.adjoint() - su).frobenius_norm(),
                  (f.y * v * f.y.adjoint() - sv).frobenius_norm(),
                  (f.w.adjoint() * f.w - CMatrix::identity(n)).frobenius_norm()});
    worst_form = std::max(worst_form, form_res);

    const XAnalysis xa = analyze_x(u, v);
    worst_norm = std::max(worst_norm, std::abs(xa.norm - 2.0));
    worst_nil = std::max(worst_nil, xa.nilpotency_residual);
    worst_red = std::max(worst_red, std::max(xa.reduction_residual, xa.preshuffle_residual));

    const CMatrix x = u + cplx(0.0, 1.0) * v;
    for (double lam : hermitian_eig(x.adjoint() * x, 1e-8).values)
      worst_spec = std::max(worst_spec, std::min(std::abs(lam), std::abs(lam - 4.0)));

    ok = ok && form_res <= 1e-8 && std::abs(xa.norm - 2.0) <= 1e-9 &&
         xa.nilpotency_residual <= 1e-9 && xa.reduction_residual <= 1e-8;
  }
  ok = ok && worst_spec <= 1e-8;
  return {"c02_pair_canonical_form", ok,
          fmt("max form residual %.2e, |norm-2| %.2e, reduction %.2e", worst_form, worst_norm,
              worst_red)};
}

CriterionResult c03_realization_independence(const AcceptanceConfig& cfg) {
  const std::size_t pencils = cfg.quick ? 20 : 100;
  std::size_t disagreements = 0;
  std::size_t tested = 0;
  for (std::size_t m = 2; m <= 5; ++m) {
    const SpinTuple r0 = canonical_spin(m);
    const SpinTuple r1 = conjugate(r0, haar_unitary(r0.dim, mix_seed(cfg.seed, 31 * m)));
    const SpinTuple infl = inflate(r0, 2);
    const SpinTuple r2 = conjugate(infl, haar_unitary(infl.dim, mix_seed(cfg.seed, 37 * m)));
    const SpinTuple* reals[3] = {&r0, &r1, &r2};
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<int> bad(pencils, 0);
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t t = 0; t < static_cast<std::int64_t>(pencils); ++t) {
        Rng rng(mix_seed(cfg.seed, 1000000 + 10000 * m + 100 * n + static_cast<std::size_t>(t)));
        HermitianPencil p;
        p.level = n;
        p.coeffs.resize(m + 1);
        for (std::size_t j = 1; j <= m; ++j) p.coeffs[j] = rng.hermitian(n);
        const CMatrix h0 = rng.hermitian(n);
        // Plant a known positivity margin: shift the constant term so the
        // assembled element has minimum eigenvalue exactly delta.
        p.coeffs[0] = h0;
        const double mu = pencil_psd(p, r0).min_eig;
        const double delta = (t % 2 == 0 ? 1.0 : -1.0) * (0.05 + 0.95 * rng.uniform());
        p.coeffs[0] = h0 + (delta - mu) * CMatrix::identity(n);

        bool positive_seen = false, negative_seen = false;
        bool verdicts[3];
        for (int r = 0; r < 3; ++r) {
          const PsdVerdict v = pencil_psd(p, *reals[r]);
          verdicts[r] = v.psd;
          if (v.min_eig >= 1e-6) positive_seen = true;
          if (v.min_eig <= -1e-6) negative_seen = true;
        }
        if (positive_seen && (!verdicts[0] || !verdicts[1] || !verdicts[2]))
          bad[static_cast<std::size_t>(t)] = 1;
        if (negative_seen && (verdicts[0] || verdicts[1] || verdicts[2]))
          bad[static_cast<std::size_t>(t)] = 1;
      }
      for (int b : bad) disagreements += static_cast<std::size_t>(b);
      tested += pencils;
    }
  }
  return {"c03_realization_independence", disagreements == 0,
          fmt("%.0f pencils, %.0f verdict disagreements", static_cast<double>(tested),
              static_cast<double>(disagreements))};
}

CriterionResult c04_choi_kraus_stinespring(const AcceptanceConfig& cfg) {
  const std::size_t per_dim = cfg.quick ? 2 : 7;
  const std::size_t dims[3] = {2, 4, 8};
  double worst_choi = 1e300, worst_recon = 0.0, worst_iso = 0.0, worst_comp = 0.0;
  bool ok = true;
  const CMatrix units[4] = {CMatrix{{1.0, 0.0}, {0.0, 0.0}}, CMatrix{{0.0, 1.0}, {0.0, 0.0}},
                            CMatrix{{0.0, 0.0}, {1.0, 0.0}}, CMatrix{{0.0, 0.0}, {0.0, 1.0}}};
  for (std::size_t di = 0; di < 3; ++di) {
    for (std::size_t t = 0; t < per_dim; ++t) {
      const SpinTuple triple =
          random_spin_triple(dims[di], mix_seed(cfg.seed, 4000 + 10 * di + t));
      const CpMap cp = choi_of_triple_map(triple);
      worst_choi = std::min(worst_choi, cp.choi_min_eig);
      for (const auto& e : units) {
        const double r =
            (apply_kraus(cp.kraus, e) - apply_triple_map(triple, e)).frobenius_norm();
        worst_recon = std::max(worst_recon, r);
      }
      const Dilation fw = dilate_triple(triple);
      worst_iso = std::max(worst_iso, fw.isometry_residual);
      for (double r : fw.residuals) worst_comp = std::max(worst_comp, r);

      const Dilation rev = reverse_dilate(triple);
      worst_iso = std::max(worst_iso, rev.isometry_residual);
      for (double r : rev.residuals) worst_comp = std::max(worst_comp, r);

      ok = ok && cp.choi_min_eig >= -1e-9 && 2 * fw.ell >= triple.dim;
    }
  }
  ok = ok && worst_recon <= 1e-8 && worst_iso <= 1e-9 && worst_comp <= 1e-8;
  return {"c04_choi_kraus_stinespring", ok,
          fmt("min choi eig %.2e, recon %.2e, compression %.2e", worst_choi,
              std::max(worst_recon, worst_iso), worst_comp)};
}

CriterionResult c05_inverse_trace_identity(const AcceptanceConfig& cfg) {
  const std::size_t per_dim = cfg.quick ? 1 : 3;
  const std::size_t dims[3] = {2, 4, 8};
  double worst_id = 0.0, worst_tr = 0.0;
  for (std::size_t di = 0; di < 3; ++di) {
    for (std::size_t t = 0; t < per_dim; ++t) {
      const SpinTuple triple =
          random_spin_triple(dims[di], mix_seed(cfg.seed, 5000 + 10 * di + t));
      const CpMap cp = choi_of_triple_map(triple);
      const InverseMapReport rep =
          inverse_map_check(triple, cp.kraus, 50, mix_seed(cfg.seed, 5100 + t));
      worst_id = std::max(worst_id, rep.identity_residual);
      worst_tr = std::max(worst_tr, rep.trace_identity_residual);
    }
  }
  const bool ok = worst_id <= 1e-8 && worst_tr <= 1e-9;
  return {"c05_inverse_trace_identity", ok,
          fmt("identity residual %.2e, trace residual %.2e", worst_id, worst_tr)};
}

CriterionResult c06_envelope_dimensions(const AcceptanceConfig& cfg) {
  (void)cfg;
  bool ok = true;
  double worst_prod = 0.0;
  std::string detail;
  for (std::size_t k = 1; k <= 3; ++k) {
    const std::size_t target = std::size_t{1} << (2 * k);  // 4^k
    const std::size_t even_dim = algebra_dim(canonical_spin(2 * k).unitaries);
    const std::size_t odd_dim = algebra_dim(canonical_spin(2 * k + 1).unitaries);
    const double prod = envelope_product_identity(k);
    worst_prod = std::max(worst_prod, prod);
    ok = ok && even_dim == target && odd_dim == target && prod <= 1e-12;
  }
  return {"c06_envelope_dimensions", ok, fmt("product identity residual %.2e", worst_prod)};
}

CriterionResult c07_commutant_irreducibility(const AcceptanceConfig& cfg) {
  bool ok = true;
  const std::size_t m_max = cfg.quick ? 7 : 9;
  for (std::size_t m = 2; m <= m_max; ++m) {
    const SpinTuple s = canonical_spin(m);
    ok = ok && commutant_dim(s.unitaries).dim == 1 && is_irreducible(s);
  }
  const std::pair<std::size_t, std::size_t> inflations[] = {{3, 2}, {4, 2}, {3, 3}, {5, 2}};
  for (const auto& [m, r] : inflations) {
    const SpinTuple s = inflate(canonical_spin(m), r);
    ok = ok && commutant_dim(s.unitaries).dim == r * r;
  }
  double worst = 0.0;
  for (std::size_t m : {3, 4, 5, 7}) {
    if (cfg.quick && m > 5) continue;
    const SpinTuple u = canonical_spin(m);
    const CMatrix q0 = haar_unitary(u.dim, mix_seed(cfg.seed, 7000 + m));
    const SpinTuple v = conjugate(u, q0);
    const auto q = intertwiner(u, v);
    if (!q) {
      ok = false;
      continue;
    }
    double res = (q->adjoint() * *q - CMatrix::identity(u.dim)).frobenius_norm();
    for (std::size_t j = 0; j < m; ++j)
      res = std::max(res, (*q * u.unitaries[j] - v.unitaries[j] * *q).frobenius_norm());
    worst = std::max(worst, res);
    ok = ok && res <= 1e-8;
  }
  return {"c07_commutant_irreducibility", ok, fmt("max intertwiner residual %.2e", worst)};
}

CriterionResult c08_sphere_and_disc(const AcceptanceConfig& cfg) {
  const std::size_t samples = cfg.quick ? 2000 : 10000;
  const SpinTuple p = pauli();

  double sphere_dev = 0.0;
  for (const auto& pt : joint_numerical_range_sample(p.unitaries, samples, mix_seed(cfg.seed, 81))) {
    const double norm = std::sqrt(pt[0] * pt[0] + pt[1] * pt[1] + pt[2] * pt[2]);
    sphere_dev = std::max(sphere_dev, std::abs(norm - 1.0));
  }

  double disc_excess = 0.0;
  const std::vector<CMatrix> pair{p.unitaries[0], p.unitaries[1]};
  for (const auto& pt : joint_numerical_range_sample(pair, samples, mix_seed(cfg.seed, 82))) {
    disc_excess = std::max(disc_excess, std::hypot(pt[0], pt[1]) - 1.0);
  }
  const SpinTuple big = conjugate(inflate(SpinTuple{2, pair}, 2),
                                  haar_unitary(4, mix_seed(cfg.seed, 83)));
  for (const auto& pt :
       joint_numerical_range_sample(big.unitaries, samples, mix_seed(cfg.seed, 84))) {
    disc_excess = std::max(disc_excess, std::hypot(pt[0], pt[1]) - 1.0);
  }

  // Coverage of the disc by <x xi, xi> for x = u + iv of a pair in M_2.
  const CMatrix x0 = pauli_x() + cplx(0.0, 1.0) * pauli_y();
  const DiscSampleReport d0 = disc_numerical_range_check(x0, samples, mix_seed(cfg.seed, 85));
  const SpinTuple rot = conjugate(SpinTuple{2, pair}, haar_unitary(2, mix_seed(cfg.seed, 86)));
  const CMatrix x1 = rot.unitaries[0] + cplx(0.0, 1.0) * rot.unitaries[1];
  const DiscSampleReport d1 = disc_numerical_range_check(x1, samples, mix_seed(cfg.seed, 87));

  const bool ok = sphere_dev <= 1e-10 && disc_excess <= 1e-10 &&
                  d0.max_abs <= 1.0 + 1e-9 && d1.max_abs <= 1.0 + 1e-9 &&
                  d0.coverage_gap <= 0.05 && d1.coverage_gap <= 0.05;
  return {"c08_sphere_and_disc", ok,
          fmt("sphere dev %.2e, disc excess %.2e, coverage gap %.3f", sphere_dev, disc_excess,
              std::max(d0.coverage_gap, d1.coverage_gap))};
}

SelfadjointTuple random_pair_with_pencil_margin(std::size_t n, double target,
                                                std::uint64_t seed) {
  Rng rng(seed);
  SelfadjointTuple h;
  h.level = n;
  h.mats = {rng.hermitian(n), rng.hermitian(n)};
  CMatrix k = kron(h.mats[0], pauli_x());
  k += kron(h.mats[1], pauli_y());
  const double lmax = max_eigenvalue_hermitian(k, 1e-8);
  const double scale = target / lmax;  // lmax > 0: k is traceless and nonzero
  h.mats[0] *= scale;
  h.mats[1] *= scale;
  return h;
}

// Pair scaled so the numerical radius of a1 + i a2 hits the target; the
// block witness is feasible exactly for targets <= 1.
SelfadjointTuple random_pair_with_radius(std::size_t l, double target, std::uint64_t seed) {
  Rng rng(seed);
  SelfadjointTuple a;
  a.level = l;
  a.mats = {rng.hermitian(l), rng.hermitian(l)};
  const double r = numerical_radius(a.mats[0] + cplx(0.0, 1.0) * a.mats[1]);
  const double scale = target / r;
  a.mats[0] *= scale;
  a.mats[1] *= scale;
  return a;
}

CriterionResult c09_ball_equalities(const AcceptanceConfig& cfg) {
  bool ok = true;

  // m = 1: the ball is exactly the operator-norm unit ball.
  const std::size_t singles = cfg.quick ? 40 : 200;
  std::size_t m1_mismatches = 0;
  for (std::size_t t = 0; t < singles; ++t) {
    Rng rng(mix_seed(cfg.seed, 9000 + t));
    const std::size_t n = 1 + t % 3;
    CMatrix h = rng.hermitian(n);
    double target = 0.2 + 1.6 * rng.uniform();
    if (std::abs(target - 1.0) < 1e-3) target += 0.05;
    h *= target / operator_norm(h);
    SelfadjointTuple tup{n, {h}};
    const bool inside = in_spin_ball(1, tup).psd;
    const bool expected = target <= 1.0;
    if (inside != expected) ++m1_mismatches;
    const bool range = matrix_range_membership_single(2, h);
    if (range != expected) ++m1_mismatches;
  }
  ok = ok && m1_mismatches == 0;

  // m = 2: certified trial tuples transfer positivity off the spin ball's
  // defining pair onto arbitrary radius-certified pairs.
  const std::size_t n_inside = cfg.quick ? 10 : 50;
  const std::size_t n_outside = cfg.quick ? 10 : 50;
  const std::size_t n_trials = cfg.quick ? 6 : 20;

  std::vector<SelfadjointTuple> trials;
  double worst_cert = 0.0;
  for (std::size_t t = 0; t < n_trials; ++t) {
    Rng rng(mix_seed(cfg.seed, 9100 + t));
    const std::size_t l = 2 + t % 2;
    const double target = 0.5 + 0.45 * rng.uniform();  // radius in [0.5, 0.95]
    trials.push_back(random_pair_with_radius(l, target, mix_seed(cfg.seed, 9200 + t)));
    const auto cert = ando_certificate(trials.back().mats[0], trials.back().mats[1]);
    if (!cert) {
      ok = false;
      continue;
    }
    worst_cert = std::max(worst_cert, cert->feasibility_residual);
    // Certificate invariants: 0 <= b <= 1 and the block matrix PSD.
    const auto beig = hermitian_eig(cert->b, 1e-7);
    if (beig.values.front() < -1e-7 || beig.values.back() > 1.0 + 1e-7) ok = false;
    const CMatrix y = 0.5 * (trials.back().mats[0] + cplx(0.0, 1.0) * trials.back().mats[1]);
    CMatrix block(2 * l, 2 * l);
    block.set_block(0, 0, cert->b);
    block.set_block(0, l, y);
    block.set_block(l, 0, y.adjoint());
    block.set_block(l, l, CMatrix::identity(l) - cert->b);
    if (min_eigenvalue_hermitian(block, 1e-7) < -1e-7) ok = false;
  }

  double worst_transfer = 0.0;
  std::size_t transfer_failures = 0;
  std::vector<SelfadjointTuple> inside_hs;
  for (std::size_t t = 0; t < n_inside; ++t) {
    Rng rng(mix_seed(cfg.seed, 9300 + t));
    const std::size_t n = 1 + t % 3;
    const double target = 0.2 + 0.7 * rng.uniform();  // strictly inside
    inside_hs.push_back(
        random_pair_with_pencil_margin(n, target, mix_seed(cfg.seed, 9400 + t)));
  }
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(inside_hs.size()); ++t) {
    const auto& h = inside_hs[static_cast<std::size_t>(t)];
    double local_worst = 0.0;
    std::size_t local_fail = 0;
    if (!in_spin_ball(2, h).psd) ++local_fail;
    for (const auto& a : trials) {
      const double min_eig = min_eigenvalue_hermitian(pencil_value(a, h), 1e-7);
      local_worst = std::min(local_worst, min_eig);
      if (min_eig < -1e-7) ++local_fail;
    }
#pragma omp critical
    {
      worst_transfer = std::min(worst_transfer, local_worst);
      transfer_failures += local_fail;
    }
  }
  ok = ok && transfer_failures == 0;

  std::size_t witness_failures = 0;
  for (std::size_t t = 0; t < n_outside; ++t) {
    Rng rng(mix_seed(cfg.seed, 9500 + t));
    const std::size_t n = 1 + t % 3;
    const double target = 1.1 + 0.9 * rng.uniform();  // strictly outside
    const SelfadjointTuple h =
        random_pair_with_pencil_margin(n, target, mix_seed(cfg.seed, 9600 + t));
    const PsdVerdict v = in_spin_ball(2, h);
    if (v.psd || v.min_eig > -1e-6) ++witness_failures;
  }
  ok = ok && witness_failures == 0;

  // Exercise the bundled report once per verdict class.
  if (!inside_hs.empty() && !trials.empty()) {
    std::vector<SelfadjointTuple> few(trials.begin(),
                                      trials.begin() + std::min<std::size_t>(3, trials.size()));
    const MaxBallReport rep_in = maxball_check_m2(inside_hs.front(), few);
    if (!rep_in.in_spin_ball || rep_in.violation) ok = false;
    const SelfadjointTuple h_out =
        random_pair_with_pencil_margin(2, 1.5, mix_seed(cfg.seed, 9700));
    const MaxBallReport rep_out = maxball_check_m2(h_out, few);
    if (rep_out.in_spin_ball || rep_out.violation) ok = false;
  }

  return {"c09_ball_equalities", ok,
          fmt("cert residual %.2e, worst transfer eig %.2e, mismatches %.0f", worst_cert,
              worst_transfer,
              static_cast<double>(m1_mismatches + transfer_failures + witness_failures))};
}

CriterionResult c10_ando_solver(const AcceptanceConfig& cfg) {
  const std::size_t count = cfg.quick ? 8 : 40;
  std::vector<int> feas_ok(count, 0), infeas_ok(count, 0);
  std::vector<double> residuals(count, 0.0);

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(count); ++t) {
    Rng rng(mix_seed(cfg.seed, 10000 + static_cast<std::size_t>(t)));
    const std::size_t l = 2 + static_cast<std::size_t>(t) % 2;
    const double target = 0.5 + 0.45 * rng.uniform();  // [0.5, 0.95]
    const SelfadjointTuple a =
        random_pair_with_radius(l, target, mix_seed(cfg.seed, 10100 + static_cast<std::size_t>(t)));
    const auto cert = ando_certificate(a.mats[0], a.mats[1]);
    bool good = cert.has_value() && cert->feasibility_residual <= 1e-7;
    if (good) {
      const auto beig = hermitian_eig(cert->b, 1e-7);
      good = beig.values.front() >= -1e-7 && beig.values.back() <= 1.0 + 1e-7;
      residuals[static_cast<std::size_t>(t)] = cert->feasibility_residual;
    }
    feas_ok[static_cast<std::size_t>(t)] = good ? 1 : 0;
  }

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(count); ++t) {
    Rng rng(mix_seed(cfg.seed, 10200 + static_cast<std::size_t>(t)));
    const std::size_t l = 2 + static_cast<std::size_t>(t) % 2;
    const double target = 1.05 + 0.45 * rng.uniform();  // [1.05, 1.5]
    const SelfadjointTuple a =
        random_pair_with_radius(l, target, mix_seed(cfg.seed, 10300 + static_cast<std::size_t>(t)));
    const auto cert = ando_certificate(a.mats[0], a.mats[1]);
    infeas_ok[static_cast<std::size_t>(t)] = cert.has_value() ? 0 : 1;
  }

  std::size_t feas = 0, infeas = 0;
  double worst = 0.0;
  for (std::size_t t = 0; t < count; ++t) {
    feas += static_cast<std::size_t>(feas_ok[t]);
    infeas += static_cast<std::size_t>(infeas_ok[t]);
    worst = std::max(worst, residuals[t]);
  }
  const bool ok = feas == count && infeas == count;
  return {"c10_ando_solver", ok,
          fmt("feasible %.0f/%.0f, infeasible flagged %.0f, worst residual %.2e",
              static_cast<double>(feas), static_cast<double>(count),
              static_cast<double>(infeas), worst)};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
  std::vector<CriterionResult> out;
  out.push_back(c01_spin_axioms(cfg));
  out.push_back(c02_pair_canonical_form(cfg));
  out.push_back(c03_realization_independence(cfg));
  out.push_back(c04_choi_kraus_stinespring(cfg));
  out.push_back(c05_inverse_trace_identity(cfg));
  out.push_back(c06_envelope_dimensions(cfg));
  out.push_back(c07_commutant_irreducibility(cfg));
  out.push_back(c08_sphere_and_disc(cfg));
  out.push_back(c09_ball_equalities(cfg));
  out.push_back(c10_ando_solver(cfg));
  return out;
}

}  // namespace spin
