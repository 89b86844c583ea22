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

#include "kmr/kmilnor/json_io.h"

#include "kmr/errors.h"

namespace kmr {

Json to_json(const Symbol& s) {
  Json j = Json::array();
  for (const auto& e : s.entries) j.push_back(to_json(e));
  return j;
}

Json to_json(const FormalSymbol& s) {
  if (s.degree() == 0) return Json{{"ell", s.ell()}, {"degree", 0}, {"value", s.scalar_value()}};
  Json terms = Json::array();
  for (const auto& t : s.terms()) terms.push_back(Json{{"coef", t.coef}, {"symbol", to_json(Symbol{t.entries})}});
  return Json{{"ell", s.ell()}, {"degree", s.degree()}, {"terms", terms}};
}

Json to_json(const ParshinChain& c) {
  Json steps = Json::array(), unif = Json::array();
  for (const auto& s : c.steps) {
    Json js = to_json(s);
    js.erase("exponent");
    steps.push_back(js);
  }
  for (const auto& u : c.uniformizers) unif.push_back(to_json(u));
  return Json{{"steps", steps}, {"uniformizers", unif}, {"ram_indices", c.ram_indices()}};
}

Json to_json(const Certificate& c) {
  Json shift = Json::array();
  for (const auto& a : c.shift) shift.push_back(to_json(a));
  return Json{{"statement", to_json(c.statement)}, {"chain", to_json(c.chain)}, {"ell", c.ell},
              {"value", c.value}, {"shift", shift}, {"trial", c.trial}};
}

Symbol symbol_from_json(const Json& j, const Tower& t, int num_vars) {
  if (!j.is_array()) throw ParseError("symbol must be a list of rational functions");
  Symbol s;
  for (const auto& e : j) s.entries.push_back(rat_func_from_json(e, t, num_vars));
  return s;
}

ParshinChain chain_from_json(const Json& j, const Tower& t, int num_vars) {
  try {
    ParshinChain c;
    const Json& steps = j.at("steps");
    std::vector<uint32_t> ram(steps.size(), 1);
    if (j.contains("ram_indices")) ram = j.at("ram_indices").get<std::vector<uint32_t>>();
    if (ram.size() != steps.size()) throw ParseError("ram_indices length mismatch");
    for (size_t i = 0; i < steps.size(); ++i) {
      CoordValuation v = coord_valuation_from_json(steps[i], t);
      v.exponent = ram[i];
      c.steps.push_back(v);
    }
    if (j.contains("uniformizers")) {
      for (const auto& u : j.at("uniformizers")) c.uniformizers.push_back(rat_func_from_json(u, t, num_vars));
    } else {
      for (const auto& v : c.steps) c.uniformizers.push_back(canonical_uniformizer(v, t, num_vars));
    }
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("chain: ") + e.what());
  }
}

Certificate certificate_from_json(const Json& j, const Tower& t, int num_vars) {
  try {
    Certificate c;
    c.statement = symbol_from_json(j.at("statement"), t, num_vars);
    c.chain = chain_from_json(j.at("chain"), t, num_vars);
    c.ell = j.at("ell").get<uint32_t>();
    c.value = j.at("value").get<uint32_t>();
    if (j.contains("shift"))
      for (const auto& a : j.at("shift")) c.shift.push_back(ground_elem_from_json(a, t));
    c.trial = j.value("trial", size_t{0});
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

}  // namespace kmr
