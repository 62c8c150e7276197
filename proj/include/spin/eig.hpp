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

#include "spin/matrix.hpp"

namespace spin {

/// Spectral data of a Hermitian matrix: eigenvalues ascending, eigenvectors
/// as orthonormal columns of a unitary matrix.
struct EigenDecomposition {
  std::vector<double> values;
  CMatrix vectors;
};

/// Cyclic complex Jacobi eigensolver. Throws NotHermitian when
/// ||a - a*||_F > tol * max(1, ||a||_F) and NoConvergence if the off-diagonal
/// mass has not dropped below 1e-13 * ||a||_F within 100 sweeps.
EigenDecomposition hermitian_eig(const CMatrix& a, double tol = 1e-10);

struct PsdVerdict {
  bool psd = false;
  double min_eig = 0.0;
};

/// Positive semidefiniteness with a relative tolerance: true iff the minimum
/// eigenvalue of (a + a*)/2 is >= -tol * max(1, ||a||_F).
PsdVerdict is_psd(const CMatrix& a, double tol = 1e-9);

/// Largest singular value, computed from the spectrum of x* x.
double operator_norm(const CMatrix& x);

double min_eigenvalue_hermitian(const CMatrix& a, double tol = 1e-9);
double max_eigenvalue_hermitian(const CMatrix& a, double tol = 1e-9);

/// Unitary factor of the polar decomposition z = q (z* z)^{1/2}. Empty when
/// z is numerically singular (relative eigenvalue cut 1e-10 on z* z) or the
/// candidate fails the unitarity check.
std::optional<CMatrix> unitary_polar_factor(const CMatrix& z);

/// Orthonormal basis (as vectors) of the null space of a Hermitian PSD
/// matrix g, with eigenvalues <= rel_tol * max eigenvalue counted as zero.
std::vector<std::vector<cplx>> hermitian_nullspace(const CMatrix& g, double rel_tol = 1e-9);

}  // namespace spin
