// Copyright 2026 The opk authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "opk/json_io.hpp"
#include "opk/parallel.hpp"
#include "opk/suites.hpp"

namespace {

using opk::Json;

enum ExitCode { kPass = 0, kFail = 1, kInputError = 2, kInternalError = 3 };

opk::AlgebraPtr load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw opk::InputError("cannot open algebra file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw opk::InputError(std::string("algebra file is not valid JSON: ") + e.what());
  }
  return opk::parse_algebra(j);
}

std::vector<long> parse_int_list(const std::string& s) {
  std::vector<long> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) throw opk::InputError("empty entry in integer list");
      out.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

Json config_json(long long trials, std::uint64_t seed, const std::string& backend, double tol,
                 const opk::AlgebraPtr& alg) {
  Json c;
  c["trials"] = trials;
  c["seed"] = seed;
  c["backend"] = backend;
  if (backend == "float") c["tol"] = tol;
  if (alg) c["algebra"] = opk::algebra_json(alg);
  return c;
}

int emit(const Json& out, bool pass) {
  std::cout << out.dump(2) << std::endl;
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checkers for the operator K-theory construction kit"};
  app.require_subcommand(1);

  std::string suite, algebra_path, xs, ys;
  long long trials = 200;
  std::uint64_t seed = 0;
  std::string backend = "exact";
  double tol = 1e-9;
  int grid = 21;

  CLI::App* check = app.add_subcommand("check", "run a law suite and emit a JSON report");
  check->add_option("suite", suite, "one of finord|matops|mvn|operads|lperm|ringops")
      ->required();
  check->add_option("--algebra", algebra_path, "algebra description JSON file");
  check->add_option("--trials", trials, "randomized trials per law");
  check->add_option("--seed", seed, "root seed; identical seeds give identical reports");
  check->add_option("--backend", backend, "exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  check->add_option("--tol", tol, "tolerance for the float backend");

  CLI::App* k0cmd = app.add_subcommand("k0", "emit the K0 presentation of an algebra");
  k0cmd->add_option("algebra", algebra_path, "algebra description JSON file")->required();

  CLI::App* cupcmd = app.add_subcommand("cup", "cup product of two reduced classes");
  cupcmd->add_option("algebra", algebra_path, "algebra description JSON file")->required();
  cupcmd->add_option("--x", xs, "comma-separated rank vector")->required();
  cupcmd->add_option("--y", ys, "comma-separated rank vector")->required();
  cupcmd->add_option("--seed", seed, "seed for the injection tuple");

  CLI::App* bottcmd = app.add_subcommand("bott", "run the Bott projection grid suite");
  bottcmd->add_option("--grid", grid, "points per axis of the square grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (check->parsed()) {
      opk::AlgebraPtr alg;
      if (!algebra_path.empty()) alg = load_algebra(algebra_path);
      opk::SuiteReport rep;
      if (suite == "finord") {
        rep = opk::finord_suite(seed, static_cast<int>(trials));
      } else if (suite == "matops") {
        rep = opk::matops_suite(seed, static_cast<int>(trials));
      } else if (suite == "operads") {
        rep = opk::operads_suite(seed, static_cast<int>(trials));
      } else if (suite == "mvn") {
        if (!alg) alg = opk::complex_field();
        rep = opk::mvn_suite(alg, seed, static_cast<int>(trials));
      } else if (suite == "lperm") {
        if (!alg) alg = opk::complex_field();
        rep = opk::lperm_coherence_suite(alg, static_cast<int>(trials), seed);
        opk::LawResult neg{"lperm.negative_control",
                           "the plain Kronecker over the stabilization is caught", 1, {}};
        opk::AlgebraPtr m2 = opk::make_algebra(opk::Field::Complex, {2});
        if (!opk::corrupted_otimes_breaks_composition(m2, 50, seed + 1))
          neg.failures.push_back({"lperm.negative_control", "no violation observed"});
        rep.laws.push_back(neg);
      } else if (suite == "ringops") {
        if (!alg) alg = opk::complex_field();
        rep = opk::ringops_suite(alg, seed, static_cast<int>(trials));
      } else {
        throw opk::InputError("unknown suite: " + suite);
      }
      Json out;
      out["command"] = "check";
      out["config"] = config_json(trials, seed, backend, tol, alg);
      Json body = opk::report_json(rep);
      for (auto& [k, v] : body.items()) out[k] = v;
      if (suite == "matops") {
        // The stored witness that composition compatibility fails over a
        // noncommutative entry ring, as exact blockwise matrices.
        opk::KronCounterexample cx = opk::kron_noncommutative_counterexample();
        opk::AlgebraPtr m2 = opk::make_algebra(opk::Field::Complex, {2});
        Json jcx;
        jcx["violates_composition"] = cx.violates_composition;
        jcx["violates_adjoint"] = cx.violates_adjoint;
        jcx["u1"] = opk::alg_matrix_json(cx.u1, m2);
        jcx["u2"] = opk::alg_matrix_json(cx.u2, m2);
        jcx["v1"] = opk::alg_matrix_json(cx.v1, m2);
        jcx["v2"] = opk::alg_matrix_json(cx.v2, m2);
        out["noncommutative_counterexample"] = jcx;
      }
      return emit(out, rep.passed());
    }

    if (k0cmd->parsed()) {
      opk::AlgebraPtr alg = load_algebra(algebra_path);
      opk::GroupPresentation g = opk::k0(alg);
      Json out;
      out["command"] = "k0";
      out["algebra"] = opk::algebra_json(alg);
      out["k0_rank"] = g.rank;
      Json basis = Json::array();
      for (std::size_t i = 0; i < g.basis.size(); ++i) {
        Json b;
        b["label"] = g.basis_labels[i];
        b["rel"] = g.basis[i].rel;
        basis.push_back(b);
      }
      out["basis"] = basis;
      return emit(out, true);
    }

    if (cupcmd->parsed()) {
      opk::AlgebraPtr alg = load_algebra(algebra_path);
      std::vector<long> u = parse_int_list(xs), v = parse_int_list(ys);
      if (static_cast<int>(u.size()) != alg->block_count() ||
          static_cast<int>(v.size()) != alg->block_count())
        throw opk::InputError("cup: rank vectors must have one entry per block");
      opk::Rng rng(seed);
      opk::InjTuple f = opk::random_inj_tuple(rng, 2);
      opk::K0RingElem c = opk::cup(opk::k0_elem(alg, u), opk::k0_elem(alg, v), f);
      Json out;
      out["command"] = "cup";
      out["algebra"] = opk::algebra_json(alg);
      out["x"] = u;
      out["y"] = v;
      out["f"] = opk::inj_tuple_json(f);
      out["cup"] = c.cls.rel;
      if (alg->commutative())
        out["oracle"] = opk::gelfand_oracle_mult(alg, u, v);
      return emit(out, true);
    }

    if (bottcmd->parsed()) {
      if (grid < 2) throw opk::InputError("bott: grid must be at least 2");
      opk::SuiteReport rep = opk::bott_suite(grid);
      opk::LawResult variant{"bott.variant_control",
                             "the linear-corner variant fails the projection law", 1, {}};
      opk::GM v = opk::bott_variant(opk::rat(3), opk::rat(4));
      if (v * v == v)
        variant.failures.push_back({"bott.variant_control", "variant unexpectedly idempotent"});
      rep.laws.push_back(variant);
      Json out;
      out["command"] = "bott";
      out["grid"] = grid;
      Json body = opk::report_json(rep);
      for (auto& [k, val] : body.items()) out[k] = val;
      return emit(out, rep.passed());
    }
  } catch (const opk::InputError& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return kInputError;
  } catch (const opk::ShapeError& e) {
    std::cerr << "input error: " << e.what() << std::endl;
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << std::endl;
    return kInternalError;
  }
  return kInputError;
}
