// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kmr/groundfield/json_io.h"

#include "kmr/errors.h"
#include "kmr/groundfield/expr.h"

namespace kmr {

Json to_json(const GroundElem& x) {
  GroundElem c = x.canonical();
  return Json{{"level", c.level()}, {"coeffs", c.coeffs()}};
}

Json to_json(const SparsePoly& f) {
  Json terms = Json::array();
  for (const auto& term : f.terms()) {
    std::vector<int> e(term.exp.begin(), term.exp.begin() + f.num_vars());
    terms.push_back(Json{{"exp", e}, {"coef", to_json(term.coef)}});
  }
  return Json{{"vars", f.num_vars()}, {"terms", terms}};
}

Json to_json(const RatFunc& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const CoordValuation& v) {
  Json j{{"var", v.var + 1}, {"exponent", v.exponent}};
  j["center"] = v.at_infinity() ? Json("inf") : to_json(*v.center);
  return j;
}

GroundElem ground_elem_from_json(const Json& j, const Tower& t) {
  if (j.is_number_integer()) return GroundElem::from_int(t, j.get<int64_t>());
  try {
    uint32_t level = j.at("level").get<uint32_t>();
    Raw coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(mod_reduce(c.get<int64_t>(), t.p()));
    return GroundElem(t, level, coeffs).canonical();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("ground element: ") + e.what());
  }
}

SparsePoly sparse_poly_from_json(const Json& j, const Tower& t) {
  try {
    int nv = j.at("vars").get<int>();
    if (nv < 0 || nv > kMaxVars) throw ParseError("unsupported number of variables");
    std::vector<Term> terms;
    for (const auto& tj : j.at("terms")) {
      Monomial e = monomial_zero();
      const auto& ej = tj.at("exp");
      if (static_cast<int>(ej.size()) != nv) throw ParseError("exponent length mismatch");
      for (int i = 0; i < nv; ++i) e[i] = ej[i].get<uint16_t>();
      terms.push_back({e, ground_elem_from_json(tj.at("coef"), t)});
    }
    return SparsePoly::from_terms(t, nv, std::move(terms));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("polynomial: ") + e.what());
  }
}

RatFunc rat_func_from_json(const Json& j, const Tower& t, int num_vars) {
  if (j.is_string()) return parse_ratfunc(j.get<std::string>(), t, num_vars);
  if (j.is_number_integer()) return RatFunc::constant(t, num_vars, j.get<int64_t>());
  if (j.contains("num")) {
    SparsePoly n = sparse_poly_from_json(j.at("num"), t);
    SparsePoly d = sparse_poly_from_json(j.at("den"), t);
    if (n.num_vars() != num_vars || d.num_vars() != num_vars) throw ParseError("variable count mismatch");
    return RatFunc(n, d);
  }
  SparsePoly n = sparse_poly_from_json(j, t);
  if (n.num_vars() != num_vars) throw ParseError("variable count mismatch");
  return RatFunc(n);
}

CoordValuation coord_valuation_from_json(const Json& j, const Tower& t) {
  try {
    int var = j.at("var").get<int>() - 1;
    if (var < 0 || var >= kMaxVars) throw ParseError("valuation variable out of range");
    uint32_t e = j.value("exponent", 1u);
    const Json& c = j.at("center");
    if (c.is_string()) {
      if (c.get<std::string>() != "inf") throw ParseError("center must be a ground element or \"inf\"");
      return coord_valuation_at_infinity(var, e);
    }
    return coord_valuation(var, ground_elem_from_json(c, t), e);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("valuation: ") + e.what());
  }
}

Json tower_sidecar(const Tower& t) {
  Json levels = Json::array();
  const auto& mods = t.relative_moduli();
  for (size_t i = 0; i < mods.size(); ++i) {
    levels.push_back(Json{{"m", Tower::chain()[i + 1]}, {"rel_mod", mods[i]}});
  }
  return Json{{"p", t.p()}, {"seed", t.seed()}, {"levels", levels}};
}

const Tower& tower_from_sidecar(const Json& j) {
  try {
    std::vector<std::vector<Raw>> mods;
    for (const auto& l : j.at("levels")) mods.push_back(l.at("rel_mod").get<std::vector<Raw>>());
    return Tower::load(j.at("p").get<uint32_t>(), j.at("seed").get<uint64_t>(), mods);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("tower sidecar: ") + e.what());
  }
}

}  // namespace kmr
