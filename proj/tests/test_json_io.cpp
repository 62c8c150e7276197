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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spin/construct.hpp"
#include "spin/json_io.hpp"
#include "spin/order_iso.hpp"
#include "spin/random.hpp"
#include "spin/spectrahedra.hpp"
#include "spin/verify.hpp"

using namespace spin;
using nlohmann::json;

TEST_CASE("matrix wire format round-trips bit exactly") {
  Rng rng(90);
  CMatrix m = rng.gaussian_matrix(3, 5);
  m(0, 0) = cplx(1.0 / 3.0, -2.0 / 7.0);  // non-terminating binary fractions

  const std::string once = json(m).dump();
  const CMatrix back = json::parse(once).get<CMatrix>();
  CHECK(back == m);  // exact, not approximate
  CHECK(json(back).dump() == once);

  const json j = json(m);
  CHECK(j.at("rows") == 3);
  CHECK(j.at("cols") == 5);
  CHECK(j.at("data").size() == 15);
  CHECK(j.at("data")[0].size() == 2);
}

TEST_CASE("matrix wire format validation") {
  CHECK_THROWS_AS(json::parse(R"({"rows":2,"cols":2,"data":[[0,0]]})").get<CMatrix>(), BadInput);
  CHECK_THROWS_AS(json::parse(R"({"rows":1,"cols":1,"data":[[0]]})").get<CMatrix>(), BadInput);
}

TEST_CASE("tuple and report round trips") {
  const SpinTuple t = conjugate(canonical_spin(4), haar_unitary(4, 91));
  const SpinTuple t2 = json::parse(json(t).dump()).get<SpinTuple>();
  CHECK(t2.dim == t.dim);
  REQUIRE(t2.arity() == t.arity());
  for (std::size_t j = 0; j < t.arity(); ++j) CHECK(t2.unitaries[j] == t.unitaries[j]);

  const VerifyReport r = verify_spin(t);
  const VerifyReport r2 = json::parse(json(r).dump()).get<VerifyReport>();
  CHECK(r2.independent == r.independent);
  CHECK(r2.gram_min_eig == r.gram_min_eig);
  CHECK(r2.traces == r.traces);

  HermitianPencil p;
  p.level = 2;
  Rng rng(92);
  p.coeffs = {rng.hermitian(2), rng.hermitian(2), rng.hermitian(2)};
  const HermitianPencil p2 = json::parse(json(p).dump()).get<HermitianPencil>();
  CHECK(p2.level == 2);
  for (std::size_t j = 0; j < 3; ++j) CHECK(p2.coeffs[j] == p.coeffs[j]);

  SelfadjointTuple s{3, {rng.hermitian(3), rng.hermitian(3)}};
  const SelfadjointTuple s2 = json::parse(json(s).dump()).get<SelfadjointTuple>();
  CHECK(s2.level == 3);
  CHECK(s2.mats[1] == s.mats[1]);
}

TEST_CASE("cp map serialization carries Choi and Kraus data") {
  const CpMap cp = choi_of_triple_map(inflate(pauli(), 2));
  const CpMap cp2 = json::parse(json(cp).dump()).get<CpMap>();
  CHECK(cp2.in_dim == 2);
  CHECK(cp2.out_dim == 4);
  CHECK(cp2.choi == cp.choi);
  REQUIRE(cp2.kraus.size() == cp.kraus.size());
  CHECK(cp2.kraus[0] == cp.kraus[0]);
  CHECK(cp2.choi_min_eig == cp.choi_min_eig);
}

TEST_CASE("serialization is deterministic across repeated calls") {
  const SpinTuple t = conjugate(canonical_spin(5), haar_unitary(4, 93));
  CHECK(json(t).dump(2) == json(t).dump(2));
  const CMatrix u = haar_unitary(8, 94);
  CHECK(json(u).dump() == json(haar_unitary(8, 94)).dump());
}
