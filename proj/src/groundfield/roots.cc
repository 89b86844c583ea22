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

#include "kmr/groundfield/roots.h"

#include <algorithm>
#include <numeric>

#include "kmr/errors.h"

namespace kmr {

namespace {

UPoly to_dense(const SparsePoly& f, int var, uint32_t level) {
  const Tower& t = f.tower();
  const FieldCtx& F = t.level(level).abs;
  UPoly g(std::max(0, f.degree_in(var)) + 1, F.zero());
  for (const auto& term : f.terms()) g[term.exp[var]] = t.to_abs(level, term.coef.at_chain_level(level));
  upoly::trim(F, g);
  return g;
}

SparsePoly from_dense(const Tower& t, int num_vars, int var, const UPoly& g, uint32_t level) {
  std::vector<Term> terms;
  for (size_t i = 0; i < g.size(); ++i) {
    Monomial e = monomial_zero();
    e[var] = static_cast<uint16_t>(i);
    terms.push_back({e, GroundElem(t, level, t.to_rel(level, g[i])).canonical()});
  }
  return SparsePoly::from_terms(t, num_vars, std::move(terms));
}

int only_variable(const SparsePoly& f) {
  uint32_t s = f.support();
  if (s == 0) return 0;
  if (s & (s - 1)) throw ConfigError("polynomial involves more than one variable");
  int v = 0;
  while (!(s & (1u << v))) ++v;
  return v;
}

}  // namespace

std::vector<RootMult> univariate_roots(const SparsePoly& f) {
  return univariate_roots(f, only_variable(f));
}

std::vector<RootMult> univariate_roots(const SparsePoly& f, int var) {
  if (f.is_zero()) throw ZeroPolyError("roots of the zero polynomial");
  if (f.support() & ~(1u << var)) throw ConfigError("polynomial involves other variables");
  const Tower& t = f.tower();
  std::vector<RootMult> out;
  int low = f.min_degree_in(var);
  SparsePoly g = f;
  if (low > 0) {
    out.push_back({GroundElem::zero(t), static_cast<uint32_t>(low)});
    Monomial m = monomial_zero();
    m[var] = static_cast<uint16_t>(low);
    g = g.divide_monomial(m);
  }
  int deg = g.degree_in(var);
  if (deg == 1) {
    out.push_back({-(g.coeff_in(var, 0).constant_value() / g.coeff_in(var, 1).constant_value()), 1});
  } else if (deg > 1) {
    uint32_t l0 = g.coef_level();
    const FieldCtx& f0 = t.level(l0).abs;
    UPoly d0 = to_dense(g, var, l0);
    std::vector<int> degs = upoly::factor_degrees(f0, d0);
    int k = 1;
    for (int d : degs) k = std::lcm(k, d);
    uint32_t target = Tower::host_level(l0 * static_cast<uint32_t>(k));
    const FieldCtx& F = t.level(target).abs;
    UPoly G = upoly::monic(F, to_dense(g, var, target));
    UPoly x = upoly::x_poly(F);
    UPoly xq0 = upoly::powmod(F, x, big_pow(t.p(), l0), G);
    UPoly X = xq0;
    for (uint32_t j = 1; j < target / l0; ++j) X = upoly::compose_mod(F, X, xq0, G);
    UPoly h = upoly::gcd(F, G, upoly::sub(F, X, x));
    std::mt19937_64 rng(t.seed() ^ 0x5deece66dULL ^ target);
    std::vector<Raw> roots = upoly::split_roots(F, h, rng);
    for (const Raw& r : roots) {
      uint32_t mult = 0;
      UPoly lin{F.neg(r), F.one()};
      UPoly cur = G;
      for (;;) {
        auto [q, rem] = upoly::divmod(F, cur, lin);
        if (!rem.empty()) break;
        cur = q;
        ++mult;
      }
      out.push_back({GroundElem(t, target, t.to_rel(target, r)).canonical(), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const RootMult& a, const RootMult& b) { return a.root < b.root; });
  return out;
}

SparsePoly univariate_gcd(const std::vector<SparsePoly>& polys, int var) {
  if (polys.empty()) throw ConfigError("gcd of an empty list");
  const Tower& t = polys[0].tower();
  int nv = polys[0].num_vars();
  uint32_t level = 1;
  for (const auto& p : polys) level = std::max(level, p.coef_level());
  const FieldCtx& F = t.level(level).abs;
  UPoly g;
  for (const auto& p : polys) {
    if (p.support() & ~(1u << var)) throw ConfigError("polynomial involves other variables");
    g = upoly::gcd(F, g, to_dense(p, var, level));
    if (upoly::degree(g) == 0) break;
  }
  return from_dense(t, nv, var, g, level);
}

}  // namespace kmr
