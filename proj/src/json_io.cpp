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

#include "spin/json_io.hpp"

#include <fstream>

namespace spin {

using nlohmann::json;

void to_json(json& j, const CMatrix& m) {
  json data = json::array();
  for (const auto& x : m.data()) data.push_back(json::array({x.real(), x.imag()}));
  j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

void from_json(const json& j, CMatrix& m) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const auto& data = j.at("data");
  if (data.size() != rows * cols)
    throw BadInput("CMatrix json: data length does not match rows*cols");
  std::vector<cplx> entries;
  entries.reserve(rows * cols);
  for (const auto& e : data) {
    if (!e.is_array() || e.size() != 2) throw BadInput("CMatrix json: entry is not [re, im]");
    entries.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  m = CMatrix(rows, cols, std::move(entries));
  if (!m.all_finite()) throw BadInput("CMatrix json: non-finite entry");
}

void to_json(json& j, const SpinTuple& s) {
  j = json{{"dim", s.dim}, {"unitaries", s.unitaries}};
}

void from_json(const json& j, SpinTuple& s) {
  s.dim = j.at("dim").get<std::size_t>();
  s.unitaries = j.at("unitaries").get<std::vector<CMatrix>>();
}

void to_json(json& j, const VerifyReport& r) {
  j = json{{"selfadjoint_residual", r.selfadjoint_residual},
           {"unitarity_residual", r.unitarity_residual},
           {"anticommute_residual", r.anticommute_residual},
           {"traces", r.traces},
           {"pairwise_hs", r.pairwise_hs},
           {"independent", r.independent},
           {"dim_parity_ok", r.dim_parity_ok},
           {"gram_min_eig", r.gram_min_eig}};
}

void from_json(const json& j, VerifyReport& r) {
  j.at("selfadjoint_residual").get_to(r.selfadjoint_residual);
  j.at("unitarity_residual").get_to(r.unitarity_residual);
  j.at("anticommute_residual").get_to(r.anticommute_residual);
  j.at("traces").get_to(r.traces);
  j.at("pairwise_hs").get_to(r.pairwise_hs);
  j.at("independent").get_to(r.independent);
  j.at("dim_parity_ok").get_to(r.dim_parity_ok);
  j.at("gram_min_eig").get_to(r.gram_min_eig);
}

void to_json(json& j, const PairCanonicalForm& f) {
  j = json{{"n", f.n}, {"y", f.y}, {"w", f.w}};
}

void from_json(const json& j, PairCanonicalForm& f) {
  j.at("n").get_to(f.n);
  j.at("y").get_to(f.y);
  j.at("w").get_to(f.w);
}

void to_json(json& j, const NilpotentReduction& r) {
  j = json{{"h", r.h}, {"shuffle", r.shuffle}, {"block_count", r.block_count}};
}

void from_json(const json& j, NilpotentReduction& r) {
  j.at("h").get_to(r.h);
  j.at("shuffle").get_to(r.shuffle);
  j.at("block_count").get_to(r.block_count);
}

void to_json(json& j, const HermitianPencil& p) {
  j = json{{"level", p.level}, {"coeffs", p.coeffs}};
}

void from_json(const json& j, HermitianPencil& p) {
  j.at("level").get_to(p.level);
  j.at("coeffs").get_to(p.coeffs);
}

void to_json(json& j, const CpMap& c) {
  j = json{{"in_dim", c.in_dim},
           {"out_dim", c.out_dim},
           {"choi", c.choi},
           {"kraus", c.kraus},
           {"unital_residual", c.unital_residual},
           {"choi_min_eig", c.choi_min_eig}};
}

void from_json(const json& j, CpMap& c) {
  j.at("in_dim").get_to(c.in_dim);
  j.at("out_dim").get_to(c.out_dim);
  j.at("choi").get_to(c.choi);
  j.at("kraus").get_to(c.kraus);
  j.at("unital_residual").get_to(c.unital_residual);
  j.at("choi_min_eig").get_to(c.choi_min_eig);
}

void to_json(json& j, const Dilation& d) {
  j = json{{"isometry", d.isometry},
           {"ell", d.ell},
           {"residuals", d.residuals},
           {"isometry_residual", d.isometry_residual}};
}

void from_json(const json& j, Dilation& d) {
  j.at("isometry").get_to(d.isometry);
  j.at("ell").get_to(d.ell);
  j.at("residuals").get_to(d.residuals);
  j.at("isometry_residual").get_to(d.isometry_residual);
}

void to_json(json& j, const SelfadjointTuple& t) {
  j = json{{"level", t.level}, {"mats", t.mats}};
}

void from_json(const json& j, SelfadjointTuple& t) {
  j.at("level").get_to(t.level);
  j.at("mats").get_to(t.mats);
}

void to_json(json& j, const AndoCertificate& c) {
  j = json{{"b", c.b},
           {"feasibility_residual", c.feasibility_residual},
           {"iterations", c.iterations}};
}

void from_json(const json& j, AndoCertificate& c) {
  j.at("b").get_to(c.b);
  j.at("feasibility_residual").get_to(c.feasibility_residual);
  j.at("iterations").get_to(c.iterations);
}

void to_json(json& j, const MaxBallTrial& t) {
  j = json{{"radius", t.radius},
           {"certified", t.certified},
           {"ando_feasible", t.ando_feasible},
           {"certificate_residual", t.certificate_residual},
           {"transfer_min_eig", t.transfer_min_eig},
           {"transferred_psd", t.transferred_psd}};
}

void to_json(json& j, const MaxBallReport& r) {
  j = json{{"in_spin_ball", r.in_spin_ball},
           {"spin_ball_min_eig", r.spin_ball_min_eig},
           {"trials", r.trials},
           {"violation", r.violation}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

}  // namespace spin
