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
#include <random>
#include <vector>

#include "spin/matrix.hpp"

namespace spin {

/// Deterministic stream derivation so that parallel loops can hand every
/// task its own independent generator.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// mt19937_64 plus hand-rolled Box-Muller; the standard pins the engine's
/// output but not the distributions', and fixture files must be reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform();   // [0, 1)
  double gaussian();  // N(0, 1)
  cplx complex_gaussian();
  std::size_t index(std::size_t n);  // {0, ..., n-1}

  std::vector<cplx> unit_vector(std::size_t d);
  CMatrix gaussian_matrix(std::size_t rows, std::size_t cols);
  CMatrix hermitian(std::size_t n);

 private:
  std::mt19937_64 eng_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-distributed unitary: QR of a complex Gaussian matrix via modified
/// Gram-Schmidt, whose R diagonal is real positive. Deterministic per seed.
CMatrix haar_unitary(std::size_t d, std::uint64_t seed);

}  // namespace spin
