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

// Command-line front end: JSON in, JSON/CSV out, deterministic for a fixed
// seed. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spin/acceptance.hpp"
#include "spin/construct.hpp"
#include "spin/dilation.hpp"
#include "spin/json_io.hpp"
#include "spin/order_iso.hpp"
#include "spin/pairs.hpp"
#include "spin/parallel.hpp"
#include "spin/random.hpp"
#include "spin/spectrahedra.hpp"
#include "spin/verify.hpp"

namespace {

using nlohmann::json;

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    spin::save_json_file(out_path, j);
  }
}

spin::SpinTuple load_tuple(const std::string& path) {
  return spin::load_json_file(path).get<spin::SpinTuple>();
}

std::vector<spin::CMatrix> load_matrix_list(const std::string& path) {
  const json j = spin::load_json_file(path);
  if (j.contains("unitaries")) return j.get<spin::SpinTuple>().unitaries;
  if (j.contains("mats")) return j.get<spin::SelfadjointTuple>().mats;
  throw spin::BadInput(path + ": expected a tuple with 'unitaries' or 'mats'");
}

// Hermitian tuples arrive either in their own form or as a spin tuple.
spin::SelfadjointTuple load_sa_tuple(const std::string& path) {
  const json j = spin::load_json_file(path);
  if (j.contains("mats")) return j.get<spin::SelfadjointTuple>();
  if (j.contains("unitaries")) {
    const auto t = j.get<spin::SpinTuple>();
    return spin::SelfadjointTuple{t.dim, t.unitaries};
  }
  throw spin::BadInput(path + ": expected a tuple with 'mats' or 'unitaries'");
}

int cmd_construct(std::size_t m, std::uint64_t seed, bool do_conjugate, std::size_t inflate_r,
                  const std::string& out) {
  spin::SpinTuple t = spin::canonical_spin(m);
  if (inflate_r > 1) t = spin::inflate(t, inflate_r);
  if (do_conjugate) t = spin::conjugate(t, spin::haar_unitary(t.dim, seed));
  emit(json(t), out);
  return 0;
}

int cmd_verify(const std::string& in, double tol, const std::string& out) {
  const spin::SpinTuple t = load_tuple(in);
  const spin::VerifyReport r = spin::verify_spin(t, tol);
  emit(json(r), out);
  return r.all_ok(tol) ? 0 : 1;
}

int cmd_canonicalize_pair(const std::string& u_path, const std::string& v_path,
                          const std::string& out) {
  const auto u = spin::load_json_file(u_path).get<spin::CMatrix>();
  const auto v = spin::load_json_file(v_path).get<spin::CMatrix>();
  const spin::PairCanonicalForm form = spin::canonicalize_pair(u, v);
  const spin::XAnalysis xa = spin::analyze_x(u, v);
  json j{{"canonical_form", form},
         {"reduction", xa.reduction},
         {"norm", xa.norm},
         {"nilpotency_residual", xa.nilpotency_residual},
         {"h_unitarity_residual", xa.h_unitarity_residual},
         {"preshuffle_residual", xa.preshuffle_residual},
         {"reduction_residual", xa.reduction_residual}};
  emit(j, out);
  return xa.reduction_residual <= 1e-8 ? 0 : 1;
}

int cmd_pencil_check(const std::string& pencil_path, const std::vector<std::string>& tuple_paths,
                     double tol, const std::string& out) {
  const auto pencil = spin::load_json_file(pencil_path).get<spin::HermitianPencil>();
  json rows = json::array();
  bool saw_pos = false, saw_neg = false, all_true = true, all_false = true;
  for (const auto& path : tuple_paths) {
    const spin::SpinTuple t = load_tuple(path);
    const spin::PsdVerdict v = spin::pencil_psd(pencil, t, tol);
    rows.push_back(json{{"tuple", path}, {"is_psd", v.psd}, {"min_eig", v.min_eig}});
    saw_pos |= v.min_eig >= 1e-6;
    saw_neg |= v.min_eig <= -1e-6;
    all_true &= v.psd;
    all_false &= !v.psd;
  }
  const bool disagree = (saw_pos && !all_true) || (saw_neg && !all_false);
  emit(json{{"realizations", rows}, {"verdicts_agree", !disagree}}, out);
  return disagree ? 1 : 0;
}

int cmd_choi(const std::string& in, const std::string& out) {
  const spin::SpinTuple t = load_tuple(in);
  const spin::CpMap cp = spin::choi_of_triple_map(t);
  emit(json(cp), out);
  return cp.choi_min_eig >= -1e-9 ? 0 : 1;
}

int cmd_dilate(const std::string& in, bool reverse, const std::string& out) {
  const spin::SpinTuple t = load_tuple(in);
  const spin::Dilation d = reverse ? spin::reverse_dilate(t) : spin::dilate_triple(t);
  emit(json(d), out);
  double worst = d.isometry_residual;
  for (double r : d.residuals) worst = std::max(worst, r);
  return worst <= 1e-8 ? 0 : 1;
}

int cmd_spectra_member(const std::string& a_path, const std::string& h_path, double tol,
                       const std::string& out) {
  const auto a = load_sa_tuple(a_path);
  const auto h = load_sa_tuple(h_path);
  const spin::PsdVerdict v = spin::in_spectrahedron(a, h, tol);
  emit(json{{"inside", v.psd}, {"min_eig", v.min_eig}}, out);
  return 0;
}

int cmd_spectra_spinball(std::size_t m, const std::string& h_path, double tol,
                         const std::string& out) {
  const auto h = load_sa_tuple(h_path);
  const spin::PsdVerdict v = spin::in_spin_ball(m, h, tol);
  emit(json{{"inside", v.psd}, {"min_eig", v.min_eig}}, out);
  return 0;
}

int cmd_spectra_maxball2(const std::string& h_path, std::size_t trials, std::uint64_t seed,
                         std::size_t max_iter, const std::string& out) {
  const auto h = load_sa_tuple(h_path);
  std::vector<spin::SelfadjointTuple> pairs;
  for (std::size_t t = 0; t < trials; ++t) {
    spin::Rng rng(spin::mix_seed(seed, 40 + t));
    spin::SelfadjointTuple a;
    a.level = 2 + t % 2;
    a.mats = {rng.hermitian(a.level), rng.hermitian(a.level)};
    // certified trials: numerical radius of a1 + i a2 in [0.5, 0.95]
    const double radius = spin::numerical_radius(a.mats[0] + spin::cplx(0.0, 1.0) * a.mats[1]);
    const double scale = (0.5 + 0.45 * rng.uniform()) / radius;
    a.mats[0] *= scale;
    a.mats[1] *= scale;
    pairs.push_back(std::move(a));
  }
  const spin::MaxBallReport rep = spin::maxball_check_m2(h, pairs, max_iter);
  emit(json(rep), out);
  return rep.violation ? 1 : 0;
}

// Necessary conditions only: max-ball membership for three or more
// variables has no finite certification, so the scan just evaluates the
// pencils of a user-supplied library of defining tuples.
int cmd_spectra_maxball_scan(const std::string& h_path, const std::vector<std::string>& a_paths,
                             double tol, const std::string& out) {
  const auto h = load_sa_tuple(h_path);
  json rows = json::array();
  bool all = true;
  for (const auto& path : a_paths) {
    const auto a = load_sa_tuple(path);
    const spin::PsdVerdict v = spin::in_spectrahedron(a, h, tol);
    rows.push_back(json{{"tuple", path}, {"inside", v.psd}, {"min_eig", v.min_eig}});
    all &= v.psd;
  }
  emit(json{{"certification", "necessary-only"},
            {"pencils", rows},
            {"all_pencils_psd", all}},
       out);
  return 0;
}

int cmd_spectra_nrange(const std::string& in, std::size_t samples, std::uint64_t seed,
                       const std::string& out) {
  const auto mats = load_matrix_list(in);
  const auto points = spin::joint_numerical_range_sample(mats, samples, seed);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out.empty()) {
    file.open(out);
    if (!file) throw spin::BadInput("cannot open " + out + " for writing");
    os = &file;
  }
  for (std::size_t j = 0; j < mats.size(); ++j) (*os) << (j ? "," : "") << "x" << (j + 1);
  (*os) << '\n';
  char buf[64];
  for (const auto& p : points) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", p[j]);
      (*os) << (j ? "," : "") << buf;
    }
    (*os) << '\n';
  }
  return 0;
}

int cmd_spectra_ando(const std::string& a1_path, const std::string& a2_path,
                     std::size_t max_iter, const std::string& out) {
  const auto a1 = spin::load_json_file(a1_path).get<spin::CMatrix>();
  const auto a2 = spin::load_json_file(a2_path).get<spin::CMatrix>();
  const auto cert = spin::ando_certificate(a1, a2, max_iter);
  if (cert) {
    json j(*cert);
    j["feasible"] = true;
    emit(j, out);
  } else {
    emit(json{{"feasible", false}}, out);
  }
  return 0;
}

int cmd_suite(bool quick, std::uint64_t seed, const std::string& out) {
  spin::AcceptanceConfig cfg;
  cfg.quick = quick;
  cfg.seed = seed;
  const auto results = spin::run_acceptance(cfg);
  bool all = true;
  json rows = json::array();
  for (const auto& r : results) {
    std::printf("%s %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    rows.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all &= r.passed;
  }
  std::printf("%s (%zu criteria)\n", all ? "ALL PASS" : "FAILURES PRESENT", results.size());
  if (!out.empty()) spin::save_json_file(out, json{{"criteria", rows}, {"all_passed", all}});
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinsys: construct, verify and transform tuples of anticommuting selfadjoint "
               "unitaries; certify order equivalence, dilations and spectrahedral membership"};
  app.require_subcommand(1);

  int threads = 0;
  app.add_option("--threads", threads, "Worker thread cap (0 = library default)")
      ->envname("SPINSYS_THREADS");

  std::uint64_t seed = 20260810;
  double tol = 1e-9;
  std::string out, in, u_path, v_path, pencil_path, a_path, h_path, a1_path, a2_path;
  std::vector<std::string> tuple_paths;
  std::size_t m = 3, inflate_r = 1, samples = 10000, max_iter = 20000, trials = 10;
  bool do_conjugate = false, reverse = false, quick = false;

  auto* construct = app.add_subcommand("construct", "Emit the canonical spin m-tuple as JSON");
  construct->add_option("--m", m, "Number of generators")->required();
  construct->add_option("--seed", seed, "Seed for derived realizations")->envname("SPINSYS_SEED");
  construct->add_flag("--conjugate", do_conjugate, "Conjugate by a Haar unitary drawn from --seed");
  construct->add_option("--inflate", inflate_r, "Tensor with an identity of this multiplicity");
  construct->add_option("--out", out, "Output path (stdout when omitted)")->envname("SPINSYS_OUT");

  auto* verify = app.add_subcommand("verify", "Audit the spin axioms for a tuple");
  verify->add_option("--in", in, "SpinTuple JSON")->required();
  verify->add_option("--tol", tol, "Residual tolerance")->envname("SPINSYS_TOL");
  verify->add_option("--out", out, "Output path");

  auto* canon = app.add_subcommand("canonicalize-pair", "Block form and nilpotent reduction");
  canon->add_option("--u", u_path, "First unitary (CMatrix JSON)")->required();
  canon->add_option("--v", v_path, "Second unitary (CMatrix JSON)")->required();
  canon->add_option("--out", out, "Output path");

  auto* pencil = app.add_subcommand("pencil-check", "Pencil positivity across realizations");
  pencil->add_option("--pencil", pencil_path, "HermitianPencil JSON")->required();
  pencil->add_option("--tuple", tuple_paths, "SpinTuple JSON (repeatable)")->required();
  pencil->add_option("--tol", tol, "PSD tolerance")->envname("SPINSYS_TOL");
  pencil->add_option("--out", out, "Output path");

  auto* choi = app.add_subcommand("choi", "Choi matrix and Kraus factors of a triple map");
  choi->add_option("--in", in, "Spin triple JSON")->required();
  choi->add_option("--out", out, "Output path");

  auto* dilate = app.add_subcommand("dilate", "Stinespring dilation of a spin triple");
  dilate->add_option("--in", in, "Spin triple JSON")->required();
  dilate->add_flag("--reverse", reverse, "Compress the amplified triple onto the Pauli triple");
  dilate->add_option("--out", out, "Output path");

  auto* spectra = app.add_subcommand("spectra", "Free spectrahedra and numerical ranges");
  spectra->require_subcommand(1);

  auto* member = spectra->add_subcommand("member", "Membership in the spectrahedron of a");
  member->add_option("--a", a_path, "Defining SelfadjointTuple JSON")->required();
  member->add_option("--in", h_path, "Candidate SelfadjointTuple JSON")->required();
  member->add_option("--tol", tol, "PSD tolerance")->envname("SPINSYS_TOL");
  member->add_option("--out", out, "Output path");

  auto* spinball = spectra->add_subcommand("spinball", "Membership in the spin ball");
  spinball->add_option("--m", m, "Number of generators")->required();
  spinball->add_option("--in", h_path, "Candidate SelfadjointTuple JSON")->required();
  spinball->add_option("--tol", tol, "PSD tolerance")->envname("SPINSYS_TOL");
  spinball->add_option("--out", out, "Output path");

  auto* maxball = spectra->add_subcommand("maxball2", "Two-variable max-ball transfer check");
  maxball->add_option("--in", h_path, "Candidate pair JSON")->required();
  maxball->add_option("--trials", trials, "Number of certified trial pairs");
  maxball->add_option("--seed", seed, "Trial generator seed")->envname("SPINSYS_SEED");
  maxball->add_option("--max-iter", max_iter, "Dykstra iteration cap")->envname("SPINSYS_MAX_ITER");
  maxball->add_option("--out", out, "Output path");

  std::vector<std::string> a_paths;
  auto* maxscan = spectra->add_subcommand(
      "maxball-scan", "Necessary-condition scan against a library of defining tuples");
  maxscan->add_option("--in", h_path, "Candidate SelfadjointTuple JSON")->required();
  maxscan->add_option("--a", a_paths, "Defining SelfadjointTuple JSON (repeatable)")->required();
  maxscan->add_option("--tol", tol, "PSD tolerance")->envname("SPINSYS_TOL");
  maxscan->add_option("--out", out, "Output path");

  auto* nrange = spectra->add_subcommand("nrange", "Sample the joint numerical range to CSV");
  nrange->add_option("--in", in, "SpinTuple or SelfadjointTuple JSON")->required();
  nrange->add_option("--samples", samples, "Sample count")->envname("SPINSYS_SAMPLES");
  nrange->add_option("--seed", seed, "Sampler seed")->envname("SPINSYS_SEED");
  nrange->add_option("--out", out, "CSV path (stdout when omitted)");

  auto* ando = spectra->add_subcommand("ando", "Numerical-radius witness by Dykstra projections");
  ando->add_option("--a1", a1_path, "First Hermitian matrix JSON")->required();
  ando->add_option("--a2", a2_path, "Second Hermitian matrix JSON")->required();
  ando->add_option("--max-iter", max_iter, "Iteration cap")->envname("SPINSYS_MAX_ITER");
  ando->add_option("--out", out, "Output path");

  auto* suite = app.add_subcommand("suite", "Run the full property suite");
  suite->add_flag("--quick", quick, "Reduced sample counts");
  suite->add_option("--seed", seed, "Suite seed")->envname("SPINSYS_SEED");
  suite->add_option("--out", out, "Report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  spin::set_num_threads(threads);

  try {
    if (construct->parsed()) return cmd_construct(m, seed, do_conjugate, inflate_r, out);
    if (verify->parsed()) return cmd_verify(in, tol, out);
    if (canon->parsed()) return cmd_canonicalize_pair(u_path, v_path, out);
    if (pencil->parsed()) return cmd_pencil_check(pencil_path, tuple_paths, tol, out);
    if (choi->parsed()) return cmd_choi(in, out);
    if (dilate->parsed()) return cmd_dilate(in, reverse, out);
    if (spectra->parsed()) {
      if (member->parsed()) return cmd_spectra_member(a_path, h_path, tol, out);
      if (spinball->parsed()) return cmd_spectra_spinball(m, h_path, tol, out);
      if (maxball->parsed()) return cmd_spectra_maxball2(h_path, trials, seed, max_iter, out);
      if (maxscan->parsed()) return cmd_spectra_maxball_scan(h_path, a_paths, tol, out);
      if (nrange->parsed()) return cmd_spectra_nrange(in, samples, seed, out);
      if (ando->parsed()) return cmd_spectra_ando(a1_path, a2_path, max_iter, out);
    }
    if (suite->parsed()) return cmd_suite(quick, seed, out);
  } catch (const spin::InvariantViolation& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const spin::ChoiNotPsd& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const spin::NoConvergence& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const spin::CapExceeded& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return 1;
  } catch (const spin::SpinError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
