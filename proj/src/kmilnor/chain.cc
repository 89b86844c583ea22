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

#include "kmr/kmilnor/chain.h"

#include "kmr/errors.h"

namespace kmr {

std::vector<uint32_t> ParshinChain::ram_indices() const {
  std::vector<uint32_t> out;
  for (const auto& s : steps) out.push_back(s.exponent);
  return out;
}

bool ParshinChain::ell_ramified(uint32_t ell) const {
  for (const auto& s : steps)
    if (s.exponent % ell == 0) return true;
  return false;
}

RatFunc ParshinChain::residue_uniformizer(size_t j) const {
  RatFunc u = uniformizers.at(j);
  for (size_t k = 0; k < j; ++k) {
    OrderResidue o = order_and_residue(u, steps[k]);
    if (o.order != 0)
      throw NotUniformizer("uniformizer " + std::to_string(j + 1) + " is not a unit at step " +
                           std::to_string(k + 1));
    u = o.residue;
  }
  return u;
}

void ParshinChain::validate() const {
  if (uniformizers.size() != steps.size()) throw ConfigError("chain needs one uniformizer per step");
  uint32_t used = 0;
  for (size_t j = 0; j < steps.size(); ++j) {
    const auto& s = steps[j];
    if (s.var < 0 || s.var >= kMaxVars) throw ConfigError("chain variable out of range");
    if (used & (1u << s.var)) throw ConfigError("chain steps must use distinct variables");
    used |= 1u << s.var;
    if (s.exponent == 0) throw ConfigError("ramification index must be positive");
    RatFunc u = residue_uniformizer(j);
    if (u.is_zero() || valuation_order(u, s) != static_cast<int64_t>(s.exponent))
      throw NotUniformizer("uniformizer " + std::to_string(j + 1) + " does not have order 1 at " + s.to_string());
  }
}

ParshinChain ParshinChain::prefix(size_t s) const {
  ParshinChain c;
  c.steps.assign(steps.begin(), steps.begin() + s);
  c.uniformizers.assign(uniformizers.begin(), uniformizers.begin() + s);
  return c;
}

ParshinChain ParshinChain::suffix(size_t s) const {
  ParshinChain c;
  for (size_t j = s; j < steps.size(); ++j) {
    c.steps.push_back(steps[j]);
    RatFunc u = uniformizers[j];
    for (size_t k = 0; k < s; ++k) u = order_and_residue(u, steps[k]).residue;
    c.uniformizers.push_back(u);
  }
  return c;
}

std::string ParshinChain::to_string() const {
  std::string s = "(";
  for (size_t j = 0; j < steps.size(); ++j) s += (j ? ", " : "") + steps[j].to_string();
  return s + ")";
}

ParshinChain coordinate_chain(const Tower& t, int num_vars, const std::vector<int>& vars,
                              const std::vector<std::optional<GroundElem>>& centers) {
  if (vars.size() != centers.size()) throw ConfigError("one center per chain variable");
  ParshinChain c;
  for (size_t j = 0; j < vars.size(); ++j) {
    if (vars[j] < 0 || vars[j] >= num_vars) throw ConfigError("chain variable out of range");
    CoordValuation v = centers[j] ? coord_valuation(vars[j], *centers[j]) : coord_valuation_at_infinity(vars[j]);
    c.uniformizers.push_back(canonical_uniformizer(v, t, num_vars));
    c.steps.push_back(std::move(v));
  }
  return c;
}

FormalSymbol tame_chain(const FormalSymbol& s, const ParshinChain& c) {
  if (s.degree() < c.length()) throw ConfigError("symbol shorter than the chain");
  if (c.uniformizers.size() != c.length()) throw ConfigError("chain needs one uniformizer per step");
  FormalSymbol cur = s;
  for (size_t j = 0; j < c.length(); ++j) {
    if (cur.formally_zero()) return FormalSymbol(s.ell(), s.degree() - c.length());
    cur = tame_step(cur, c.steps[j], c.residue_uniformizer(j));
  }
  return cur;
}

FormalSymbol tame_chain(const Symbol& s, uint32_t ell, const ParshinChain& c) {
  return tame_chain(FormalSymbol::from_symbol(s, ell), c);
}

ParshinChain monomial_pullback(const ParshinChain& c, const std::vector<int64_t>& exponents) {
  if (exponents.size() != c.length()) throw BadExponent("one exponent per chain step");
  ParshinChain out = c;
  uint32_t p = 0;
  if (!c.uniformizers.empty()) p = c.uniformizers[0].tower().p();
  for (size_t j = 0; j < exponents.size(); ++j) {
    int64_t e = exponents[j];
    if (e <= 0) throw BadExponent("exponent " + std::to_string(e) + " is not positive");
    if (p && e % p == 0) throw BadExponent("exponent " + std::to_string(e) + " is divisible by p");
    out.steps[j].exponent = static_cast<uint32_t>(c.steps[j].exponent * e);
  }
  return out;
}

}  // namespace kmr
