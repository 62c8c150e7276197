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

#include <string>

#include <json.hpp>

#include "spin/construct.hpp"
#include "spin/dilation.hpp"
#include "spin/matrix.hpp"
#include "spin/order_iso.hpp"
#include "spin/pairs.hpp"
#include "spin/spectrahedra.hpp"
#include "spin/verify.hpp"

namespace spin {

// Matrix wire format: {"rows": r, "cols": c, "data": [[re, im], ...]},
// row-major. Doubles round-trip bit exactly through nlohmann's dtoa.
void to_json(nlohmann::json& j, const CMatrix& m);
void from_json(const nlohmann::json& j, CMatrix& m);

void to_json(nlohmann::json& j, const SpinTuple& s);     // {"dim", "unitaries"}
void from_json(const nlohmann::json& j, SpinTuple& s);

void to_json(nlohmann::json& j, const VerifyReport& r);
void from_json(const nlohmann::json& j, VerifyReport& r);

void to_json(nlohmann::json& j, const PairCanonicalForm& f);
void from_json(const nlohmann::json& j, PairCanonicalForm& f);

void to_json(nlohmann::json& j, const NilpotentReduction& r);
void from_json(const nlohmann::json& j, NilpotentReduction& r);

void to_json(nlohmann::json& j, const HermitianPencil& p);
void from_json(const nlohmann::json& j, HermitianPencil& p);

void to_json(nlohmann::json& j, const CpMap& c);
void from_json(const nlohmann::json& j, CpMap& c);

void to_json(nlohmann::json& j, const Dilation& d);
void from_json(const nlohmann::json& j, Dilation& d);

void to_json(nlohmann::json& j, const SelfadjointTuple& t);
void from_json(const nlohmann::json& j, SelfadjointTuple& t);

void to_json(nlohmann::json& j, const AndoCertificate& c);
void from_json(const nlohmann::json& j, AndoCertificate& c);

void to_json(nlohmann::json& j, const MaxBallTrial& t);
void to_json(nlohmann::json& j, const MaxBallReport& r);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace spin
