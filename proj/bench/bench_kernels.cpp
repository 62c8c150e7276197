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

// Serial reference kernels against the OpenMP ones, plus a batched pencil
// sweep, which is where the thread pool actually earns its keep.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "spin/construct.hpp"
#include "spin/matrix.hpp"
#include "spin/order_iso.hpp"
#include "spin/parallel.hpp"
#include "spin/random.hpp"

using namespace spin;
using clock_type = std::chrono::steady_clock;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto start = clock_type::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto stop = clock_type::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void row(const std::string& name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.3f ms %10.3f ms %8.2fx\n", name.c_str(), serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 5;
  if (argc > 1) reps = std::atoi(argv[1]);
  std::printf("threads available: %d (OpenMP %s)\n", max_threads(),
              openmp_compiled() ? "on" : "off");
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

  Rng rng(2026);
  for (std::size_t n : {64u, 128u, 256u}) {
    const CMatrix a = rng.gaussian_matrix(n, n);
    const CMatrix b = rng.gaussian_matrix(n, n);
    const double s = time_ms([&] { detail::mul_serial(a, b); }, reps);
    const double p = time_ms([&] { detail::mul_parallel(a, b); }, reps);
    row("mul " + std::to_string(n) + "x" + std::to_string(n), s, p);
  }

  {
    const CMatrix a = rng.gaussian_matrix(24, 24);
    const CMatrix b = rng.gaussian_matrix(24, 24);
    const double s = time_ms([&] { detail::kron_serial(a, b); }, reps);
    const double p = time_ms([&] { detail::kron_parallel(a, b); }, reps);
    row("kron 24x24 (x) 24x24", s, p);
  }

  // Batched pencil sweep: verdicts for 256 planted pencils on a conjugated
  // realization; the parallel path fans out whole pencils.
  {
    const SpinTuple s4 = conjugate(canonical_spin(4), haar_unitary(4, 11));
    std::vector<HermitianPencil> pencils;
    for (int t = 0; t < 256; ++t) {
      Rng prng(mix_seed(5, t));
      HermitianPencil p;
      p.level = 3;
      p.coeffs.resize(5);
      p.coeffs[0] = prng.hermitian(3) + 3.0 * CMatrix::identity(3);
      for (int j = 1; j <= 4; ++j) p.coeffs[j] = prng.hermitian(3);
      pencils.push_back(std::move(p));
    }
    std::vector<int> verdicts(pencils.size());
    auto sweep_serial = [&] {
      for (std::size_t i = 0; i < pencils.size(); ++i)
        verdicts[i] = pencil_psd(pencils[i], s4).psd ? 1 : 0;
    };
    auto sweep_parallel = [&] {
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(pencils.size()); ++i)
        verdicts[static_cast<std::size_t>(i)] =
            pencil_psd(pencils[static_cast<std::size_t>(i)], s4).psd ? 1 : 0;
    };
    const double s = time_ms(sweep_serial, reps);
    const double p = time_ms(sweep_parallel, reps);
    row("pencil sweep (256 pencils)", s, p);
  }
  return 0;
}
