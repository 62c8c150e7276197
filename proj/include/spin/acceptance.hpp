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
#include <string>
#include <vector>

namespace spin {

/// One named end-to-end property of the library, checked at full strength.
/// The quick flag scales the sample counts down for smoke runs; thresholds
/// never change.
struct AcceptanceConfig {
  bool quick = false;
  std::uint64_t seed = 20260810;
};

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg);

}  // namespace spin
