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

namespace spin {

// Thread control for the OpenMP kernels. Everything in the library is a pure
// function of its inputs, so parallel and serial paths must produce the same
// bytes; parallelism only changes wall time.

void set_num_threads(int t);
int max_threads();
bool openmp_compiled();

/// True when the parallel kernels should be used (OpenMP compiled in and
/// not disabled via set_num_threads(1)).
bool parallel_enabled();

}  // namespace spin
