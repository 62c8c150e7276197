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
#include "spin/matrix.hpp"

namespace spin {

/// Block form of a spin pair: y u y* = diag(1_n, -1_n) and
/// y v y* = [[0, w], [w*, 0]] for unitaries y (d x d) and w (n x n), n = d/2.
struct PairCanonicalForm {
  std::size_t n = 0;
  CMatrix y;
  CMatrix w;
};

/// Data reducing x = u + iv to a direct sum of n copies of g = [[0,2],[0,0]]:
/// h* x h = [[0, -2 1_n], [0, 0]], then the sign flip diag(1_n, -1_n) and the
/// perfect-shuffle permutation produce the block-diagonal form.
struct NilpotentReduction {
  CMatrix h;                         // d x d unitary
  std::vector<std::size_t> shuffle;  // new index -> old index
  std::size_t block_count = 0;       // n = d/2
};

PairCanonicalForm canonicalize_pair(const CMatrix& u, const CMatrix& v);

struct XAnalysis {
  double norm = 0.0;                 // largest singular value of x
  double nilpotency_residual = 0.0;  // ||x^2||_F
  NilpotentReduction reduction;
  double h_unitarity_residual = 0.0;  // ||h* h - 1||_F, reported, not assumed
  double preshuffle_residual = 0.0;   // distance of h* x h to [[0,-2 1_n],[0,0]]
  double reduction_residual = 0.0;    // distance of the shuffled form to (+)_1^n g
};

XAnalysis analyze_x(const CMatrix& u, const CMatrix& v);

struct DiscSampleReport {
  double max_abs = 0.0;       // largest |<x xi, xi>| observed
  double coverage_gap = 0.0;  // support gap between the sample hull and the unit disc
};

/// Monte-Carlo check that the sampled numerical range of x fills the closed
/// unit disc: <x xi, xi> over Haar-random unit vectors, support function
/// compared against the disc on an angular grid of step 0.05.
DiscSampleReport disc_numerical_range_check(const CMatrix& x, std::size_t samples,
                                            std::uint64_t seed);

}  // namespace spin
