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

#include <vector>

#include "spin/construct.hpp"
#include "spin/matrix.hpp"

namespace spin {

/// Stinespring isometry data. For the forward direction V maps C^d into
/// C^2 (x) C^ell and compresses sigma_j (x) 1_ell onto the j-th generator;
/// for the reverse direction V maps C^2 into C^d (x) C^ell and compresses
/// u_j (x) 1_ell onto sigma_j.
struct Dilation {
  CMatrix isometry;
  std::size_t ell = 0;
  std::vector<double> residuals;      // per generator
  double isometry_residual = 0.0;     // ||V* V - 1||_F
};

/// Exhibit a spin triple as a compression of the amplified Pauli triple.
/// ell is the Choi rank of the triple map; no minimality is claimed.
Dilation dilate_triple(const SpinTuple& t);

/// The reverse direction: the Pauli triple as a compression of the
/// amplified input triple, built from the inverse map's Kraus factors.
Dilation reverse_dilate(const SpinTuple& t);

}  // namespace spin
