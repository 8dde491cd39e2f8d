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

#ifndef OPK_JSON_IO_HPP
#define OPK_JSON_IO_HPP

#include <json.hpp>

#include <string>

#include "opk/injections.hpp"
#include "opk/report.hpp"
#include "opk/ringops.hpp"
#include "opk/starmat.hpp"

namespace opk {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline AlgebraPtr parse_algebra(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("blocks"))
    throw InputError("algebra: expected {\"field\": \"C\"|\"R\", \"blocks\": [...]}");
  std::string f = j["field"].get<std::string>();
  Field field;
  if (f == "C" || f == "c")
    field = Field::Complex;
  else if (f == "R" || f == "r")
    field = Field::Real;
  else
    throw InputError("algebra: field must be \"C\" or \"R\"");
  if (!j["blocks"].is_array()) throw InputError("algebra: blocks must be an array");
  std::vector<int> blocks;
  for (const auto& b : j["blocks"]) {
    if (!b.is_number_integer() || b.get<long>() < 1)
      throw InputError("algebra: blocks must be positive integers");
    blocks.push_back(b.get<int>());
  }
  return make_algebra(field, std::move(blocks));
}

inline Json algebra_json(const AlgebraPtr& alg) {
  Json j;
  j["field"] = alg->field == Field::Complex ? "C" : "R";
  j["blocks"] = alg->blocks;
  return j;
}

// A rational component as number-or-string: exact values that do not fit an
// int64 are emitted as decimal strings.
inline Json mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

/// One entry as the quadruple [re_num, re_den, im_num, im_den].
inline Json grat_json(const GRat& z) {
  return Json::array({mpz_json(z.re.get_num()), mpz_json(z.re.get_den()),
                      mpz_json(z.im.get_num()), mpz_json(z.im.get_den())});
}

inline Json matrix_json(const StarMatrix<GRat>& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.cols(); ++j) row.push_back(grat_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline Json finmap_json(const FinMap& f) {
  Json j;
  j["cod"] = f.cod();
  j["table"] = f.table();
  return j;
}

inline Json injection_json(const EAInjection& h) {
  Json j;
  j["prefix"] = Json::array();
  for (long long v : h.prefix()) j["prefix"].push_back(v);
  j["slope"] = h.slope();
  j["offset"] = h.offset();
  return j;
}

inline Json inj_tuple_json(const InjTuple& f) {
  Json j = Json::array();
  for (int i = 1; i <= f.arity(); ++i) j.push_back(injection_json(f.component(i)));
  return j;
}

inline Json based_map_json(const BasedMap& f) {
  Json j;
  j["cod"] = f.cod();
  Json t = Json::array();
  for (int x = 1; x <= f.dom(); ++x) t.push_back(f(x));
  j["table"] = t;
  return j;
}

// Fixture serialization for objects and morphisms of the ring-operator
// category, so failing fragments can be replayed.
inline Json wreath_object_json(const WreathObject& x) {
  Json j;
  j["m"] = x.m;
  j["as"] = x.as;
  return j;
}

inline Json wreath_mor_json(const WreathMor& w) {
  Json j;
  j["src"] = wreath_object_json(w.src);
  j["tgt"] = wreath_object_json(w.tgt);
  j["psi"] = based_map_json(w.fhat.psi);
  Json comps = Json::array();
  for (const auto& c : w.fhat.comps) comps.push_back(inj_tuple_json(c));
  j["operad"] = comps;
  Json kappas = Json::array();
  for (const auto& k : w.kappas) kappas.push_back(based_map_json(k));
  j["kappas"] = kappas;
  return j;
}

/// Blockwise serialization of a matrix over a block algebra: one scalar
/// matrix per block, entries as exact quadruples.
inline Json alg_matrix_json(const StarMatrix<AlgElem<GRat>>& m, const AlgebraPtr& alg) {
  Json blocks = Json::array();
  for (int j = 0; j < alg->block_count(); ++j) blocks.push_back(matrix_json(expand_block(m, alg, j)));
  return blocks;
}

inline Json law_json(const LawResult& law) {
  Json j;
  j["id"] = law.id;
  j["statement"] = law.statement;
  j["trials"] = law.trials;
  j["pass"] = law.passed();
  Json fails = Json::array();
  for (const auto& f : law.failures) {
    Json jf;
    jf["law"] = f.law;
    jf["detail"] = f.detail;
    fails.push_back(jf);
  }
  j["failures"] = fails;
  return j;
}

inline Json report_json(const SuiteReport& rep) {
  Json j;
  j["suite"] = rep.suite;
  Json laws = Json::array();
  for (const auto& law : rep.laws) laws.push_back(law_json(law));
  j["laws"] = laws;
  j["pass"] = rep.passed();
  return j;
}

}  // namespace opk

#endif  // OPK_JSON_IO_HPP
