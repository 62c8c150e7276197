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

#include <stdexcept>
#include <string>

namespace spin {

/// Base class for every error thrown by the library.
struct SpinError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ShapeMismatch : SpinError {
  using SpinError::SpinError;
};

struct NotHermitian : SpinError {
  using SpinError::SpinError;
};

struct NotUnitary : SpinError {
  using SpinError::SpinError;
};

struct NoConvergence : SpinError {
  using SpinError::SpinError;
};

struct BadArity : SpinError {
  using SpinError::SpinError;
};

struct ArityMismatch : SpinError {
  using SpinError::SpinError;
};

struct InvariantViolation : SpinError {
  using SpinError::SpinError;
};

struct ChoiNotPsd : SpinError {
  using SpinError::SpinError;
};

struct CapExceeded : SpinError {
  using SpinError::SpinError;
};

struct PartitionOfUnityViolated : SpinError {
  using SpinError::SpinError;
};

struct BadInput : SpinError {
  using SpinError::SpinError;
};

}  // namespace spin
