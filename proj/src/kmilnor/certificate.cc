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

#include "kmr/kmilnor/certificate.h"

#include <algorithm>
#include <random>

#include "kmr/errors.h"
#include "kmr/groundfield/roots.h"
#include "kmr/parallel.h"

namespace kmr {

bool Certificate::replay() const {
  if (statement.degree() != chain.length() || value == 0) return false;
  try {
    chain.validate();
    return tame_chain(statement, ell, chain).scalar_value() == value;
  } catch (const Error&) {
    return false;
  }
}

namespace {

void add_poly_centers(const SparsePoly& f, int var, std::vector<GroundElem>& out) {
  if (f.degree_in(var) <= 0) return;
  SparsePoly g = univariate_gcd(f.coefficient_polys(var), var);
  if (g.degree_in(var) <= 0) return;
  for (const auto& r : univariate_roots(g, var)) out.push_back(r.root);
}

// Centers of the valuations t_var = a at which some entry has nonzero
// order; infinity is encoded as nullopt and comes last.
std::vector<std::optional<GroundElem>> candidate_centers(const FormalSymbol& s, int var) {
  std::vector<GroundElem> finite;
  bool inf = false;
  for (const auto& term : s.terms()) {
    for (const auto& e : term.entries) {
      add_poly_centers(e.num(), var, finite);
      add_poly_centers(e.den(), var, finite);
      if (e.num().degree_in(var) != e.den().degree_in(var)) inf = true;
    }
  }
  std::sort(finite.begin(), finite.end());
  finite.erase(std::unique(finite.begin(), finite.end()), finite.end());
  std::vector<std::optional<GroundElem>> out(finite.begin(), finite.end());
  if (inf) out.push_back(std::nullopt);
  return out;
}

struct Dfs {
  const Tower& tower;
  int nv;
  size_t limit;
  size_t nodes = 0;
  std::vector<CoordValuation> path;
  std::mt19937_64* shuffle = nullptr;

  bool run(const FormalSymbol& cur, uint32_t used) {
    if (cur.degree() == 0) return cur.scalar_value() != 0;
    int free_vars = nv - __builtin_popcount(used);
    if (free_vars < static_cast<int>(cur.degree())) return false;
    std::vector<int> vars;
    for (int var = 0; var < nv; ++var)
      if (!(used & (1u << var))) vars.push_back(var);
    if (shuffle) std::shuffle(vars.begin(), vars.end(), *shuffle);
    for (int var : vars) {
      auto centers = candidate_centers(cur, var);
      if (shuffle) std::shuffle(centers.begin(), centers.end(), *shuffle);
      for (const auto& c : centers) {
        if (++nodes > limit) return false;
        CoordValuation v = c ? coord_valuation(var, *c) : coord_valuation_at_infinity(var);
        FormalSymbol next = tame_step(cur, v, canonical_uniformizer(v, tower, nv));
        if (next.formally_zero()) continue;
        path.push_back(v);
        if (run(next, used | (1u << var))) return true;
        path.pop_back();
        if (nodes > limit) return false;
      }
    }
    return false;
  }
};

}  // namespace

namespace {

std::optional<Certificate> certify_impl(const Symbol& s, uint32_t ell, size_t node_limit, std::mt19937_64* rng) {
  if (s.entries.empty()) return std::nullopt;
  for (const auto& e : s.entries)
    if (e.is_zero()) throw ZeroEntry("symbol entry is zero");
  const Tower& t = s.entries[0].tower();
  int nv = s.entries[0].num_vars();
  FormalSymbol f = FormalSymbol::from_symbol(s, ell);
  if (f.formally_zero()) return std::nullopt;
  Dfs dfs{t, nv, node_limit, 0, {}, rng};
  if (!dfs.run(f, 0)) return std::nullopt;
  Certificate c;
  c.statement = s;
  c.ell = ell;
  for (const auto& v : dfs.path) {
    c.chain.uniformizers.push_back(canonical_uniformizer(v, t, nv));
    c.chain.steps.push_back(v);
  }
  c.value = tame_chain(f, c.chain).scalar_value();
  return c;
}

}  // namespace

std::optional<Certificate> certify_symbol(const Symbol& s, uint32_t ell, size_t node_limit) {
  return certify_impl(s, ell, node_limit, nullptr);
}

std::optional<Certificate> certificate_search(const std::vector<RatFunc>& elements, const CertOptions& opt) {
  if (elements.empty() || opt.budget == 0) return std::nullopt;
  for (const auto& e : elements)
    if (e.is_zero()) throw ZeroEntry("certificate_search on a zero element");
  const Tower& t = elements[0].tower();
  int nv = elements[0].num_vars();
  size_t trials = opt.budget;
  static const uint32_t kShiftLevels[] = {1, 2, 6};
  std::vector<std::optional<Certificate>> found(trials);
  auto attempt = [&](size_t i) -> bool {
    std::vector<GroundElem> shift;
    Symbol s;
    std::mt19937_64 rng(mix_seed(opt.seed, i));
    bool reorder = false;
    if (i == 0 || !opt.allow_shifts) {
      s.entries = elements;
      reorder = i > 0;
    } else {
      for (size_t k = 0; k < elements.size(); ++k) {
        GroundElem a = i == 1 ? GroundElem::one(t) : GroundElem::random(t, kShiftLevels[i % 3], rng);
        shift.push_back(a);
        RatFunc x = elements[k] - RatFunc::constant(t, nv, a);
        if (x.is_zero()) return false;
        s.entries.push_back(x);
      }
    }
    auto c = certify_impl(s, opt.ell, opt.node_limit, reorder ? &rng : nullptr);
    if (!c) return false;
    c->shift = shift;
    c->trial = i;
    found[i] = std::move(c);
    return true;
  };
  auto best = parallel_find_first(trials, opt.workers, attempt);
  if (!best) return std::nullopt;
  return found[*best];
}

}  // namespace kmr
