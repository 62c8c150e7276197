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

#include "spin/random.hpp"

#include <cmath>

namespace spin {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined words
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

cplx Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

std::size_t Rng::index(std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

std::vector<cplx> Rng::unit_vector(std::size_t d) {
  std::vector<cplx> v(d);
  double norm2 = 0.0;
  for (auto& x : v) {
    x = complex_gaussian();
    norm2 += std::norm(x);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& x : v) x *= inv;
  return v;
}

CMatrix Rng::gaussian_matrix(std::size_t rows, std::size_t cols) {
  CMatrix m(rows, cols);
  for (auto& x : m.data()) x = complex_gaussian();
  return m;
}

CMatrix Rng::hermitian(std::size_t n) {
  const CMatrix g = gaussian_matrix(n, n);
  return 0.5 * (g + g.adjoint());
}

CMatrix haar_unitary(std::size_t d, std::uint64_t seed) {
  if (d < 1) throw BadInput("haar_unitary: dimension must be >= 1");
  Rng rng(mix_seed(seed, 0x5ab00f5eedULL));
  CMatrix a = rng.gaussian_matrix(d, d);

  // Modified Gram-Schmidt with one re-orthogonalisation pass. The R diagonal
  // comes out real positive, which is the normalisation that makes Q Haar.
  for (std::size_t j = 0; j < d; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cplx proj = 0.0;
        for (std::size_t i = 0; i < d; ++i) proj += std::conj(a(i, k)) * a(i, j);
        for (std::size_t i = 0; i < d; ++i) a(i, j) -= proj * a(i, k);
      }
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm2 += std::norm(a(i, j));
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < d; ++i) a(i, j) *= inv;
  }
  return a;
}

}  // namespace spin
