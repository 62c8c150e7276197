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
#include <optional>
#include <vector>

#include "spin/construct.hpp"
#include "spin/eig.hpp"
#include "spin/matrix.hpp"

namespace spin {

/// Tuple (h_1, ..., h_m) of Hermitian level x level matrices; serves both as
/// a membership candidate and as the defining tuple of a pencil.
struct SelfadjointTuple {
  std::size_t level = 0;
  std::vector<CMatrix> mats;

  std::size_t arity() const { return mats.size(); }
  void validate() const;
};

/// L_a(h) = 1_n (x) 1_d - sum_j h_j (x) a_j, multiplicity factor left.
CMatrix pencil_value(const SelfadjointTuple& a, const SelfadjointTuple& h);

PsdVerdict in_spectrahedron(const SelfadjointTuple& a, const SelfadjointTuple& h,
                            double tol = 1e-9);

/// Membership in the spin ball: the pencil of the canonical m-tuple
/// (sigma_Z when m = 1). Well defined because the verdict does not depend
/// on the realization.
PsdVerdict in_spin_ball(std::size_t m, const SelfadjointTuple& h, double tol = 1e-9);

/// max over theta of lambda_max((e^{i theta} y + e^{-i theta} y*) / 2),
/// coarse grid followed by golden-section refinement to 1e-10 in theta.
double numerical_radius(const CMatrix& y, std::size_t grid = 720);

/// Tuples (<x_1 xi, xi>, ...) over Haar-random unit vectors. Components are
/// real parts; for selfadjoint inputs the imaginary parts vanish to 1e-12.
std::vector<std::vector<double>> joint_numerical_range_sample(const std::vector<CMatrix>& xs,
                                                              std::size_t samples,
                                                              std::uint64_t seed);

/// Witness for a numerical-radius bound: Hermitian b with 0 <= b <= 1 and
/// [[b, y], [y*, 1 - b]] PSD, found by Dykstra alternating projections.
struct AndoCertificate {
  CMatrix b;
  double feasibility_residual = 0.0;
  std::size_t iterations = 0;
};

/// Empty result means infeasible: the iteration cap was reached with the
/// residual still above 1e-6. Feasibility is equivalent to the numerical
/// radius of a1 + i a2 being at most 1.
std::optional<AndoCertificate> ando_certificate(const CMatrix& a1, const CMatrix& a2,
                                                std::size_t max_iter = 20000);

struct MaxBallTrial {
  double radius = 0.0;  // numerical radius of a1 + i a2
  bool certified = false;
  bool ando_feasible = false;
  double certificate_residual = 0.0;
  double transfer_min_eig = 0.0;  // min eig of 1 (x) 1 - h1 (x) a1 - h2 (x) a2
  bool transferred_psd = false;
};

struct MaxBallReport {
  bool in_spin_ball = false;
  double spin_ball_min_eig = 0.0;  // min eig of the (sigma_X, sigma_Y) pencil
  std::vector<MaxBallTrial> trials;
  bool violation = false;  // inside the spin ball but some certified pencil failed
};

/// Exercise the two-variable ball equality: check h against the defining
/// Pauli pair, then against each certified trial tuple through the Ando
/// certificate construction.
MaxBallReport maxball_check_m2(const SelfadjointTuple& h,
                               const std::vector<SelfadjointTuple>& trials,
                               std::size_t ando_max_iter = 20000);

struct ConvexityReport {
  double partition_residual = 0.0;
  std::vector<PsdVerdict> member_verdicts;
  PsdVerdict combined;
};

/// Verify that a matrix convex combination sum gamma_l* Lambda_l gamma_l of
/// members stays inside the spectrahedron of a. Throws
/// PartitionOfUnityViolated when sum gamma_l* gamma_l != 1 within 1e-9.
ConvexityReport matrix_convexity_probe(const SelfadjointTuple& a,
                                       const std::vector<SelfadjointTuple>& members,
                                       const std::vector<CMatrix>& isometries);

/// Membership of h in the matrix range of a single non-scalar selfadjoint
/// unitary: both 1 + h and 1 - h positive semidefinite.
bool matrix_range_membership_single(std::size_t u_dim, const CMatrix& h, double tol = 1e-9);

}  // namespace spin
