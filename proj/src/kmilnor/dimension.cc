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

#include "kmr/kmilnor/dimension.h"

#include <algorithm>
#include <functional>
#include <random>

#include "kmr/errors.h"
#include "kmr/parallel.h"

namespace kmr {

int ground_rank(std::vector<std::vector<GroundElem>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  size_t cols = rows[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    GroundElem inv = rows[rank][c].inverse();
    for (size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      GroundElem f = rows[r][c] * inv;
      for (size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] - f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<GroundElem> scaled_gradient(const RatFunc& f, const std::vector<GroundElem>& point) {
  GroundElem n = f.num().evaluate(point), d = f.den().evaluate(point);
  if (d.is_zero()) throw ZeroError("denominator vanishes at the sample point");
  std::vector<GroundElem> g;
  for (int j = 0; j < f.num_vars(); ++j) {
    GroundElem nj = f.num().derivative(j).evaluate(point);
    GroundElem dj = f.den().derivative(j).evaluate(point);
    g.push_back(nj * d - n * dj);
  }
  return g;
}

int jacobian_rank(const std::vector<RatFunc>& gens) {
  if (gens.empty()) return 0;
  const Tower& t = gens[0].tower();
  int nv = gens[0].num_vars();
  int best = 0;
  for (uint64_t k = 0; k < 3; ++k) {
    std::mt19937_64 rng(mix_seed(0x6a09e667f3bcc908ULL, k));
    std::vector<GroundElem> pt;
    for (int i = 0; i < nv; ++i) pt.push_back(GroundElem::random(t, 12, rng));
    std::vector<std::vector<GroundElem>> rows;
    try {
      for (const auto& g : gens) rows.push_back(scaled_gradient(g, pt));
    } catch (const ZeroError&) {
      continue;
    }
    best = std::max(best, ground_rank(std::move(rows)));
    if (best == static_cast<int>(std::min<size_t>(gens.size(), nv))) break;
  }
  return best;
}

RatFunc separable_root(const RatFunc& f) {
  RatFunc g = f;
  while (!g.is_constant() && g.all_derivatives_vanish()) g = g.pth_root();
  return g;
}

namespace {

// Calls fn on the r-subsets of [0, n) in lexicographic order until it
// returns true.
bool for_each_subset(int n, int r, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return false;
  for (;;) {
    if (fn(idx)) return true;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

DimBounds milnor_dim_bounds(const std::vector<RatFunc>& gens, int trdeg, const CertOptions& opt, DimMode mode) {
  std::vector<RatFunc> g;
  uint32_t support = 0;
  for (const auto& x : gens) {
    if (x.is_zero()) throw ZeroInputError("zero generator");
    if (x.is_constant()) continue;
    g.push_back(separable_root(x));
    support |= x.support();
  }
  DimBounds b;
  if (g.empty()) {
    b.upper_reason = "all generators are constant";
    return b;
  }
  int axiom_upper = std::min({trdeg, __builtin_popcount(support), static_cast<int>(g.size())});
  int jac = jacobian_rank(g);
  b.upper = std::min(axiom_upper, jac);
  b.upper_reason = "min(trdeg, variables involved, generators, Jacobian rank)";
  CertOptions o = opt;
  o.allow_shifts = mode == DimMode::Rational;
  if (mode == DimMode::Generated) o.budget = std::min<size_t>(o.budget, 1);
  for (int r = b.upper; r >= 1 && b.lower == 0; --r) {
    for_each_subset(static_cast<int>(g.size()), r, [&](const std::vector<int>& idx) {
      std::vector<RatFunc> sub;
      for (int i : idx) sub.push_back(g[i]);
      if (r > 1 && jacobian_rank(sub) < r) return false;
      auto c = certificate_search(sub, o);
      if (!c) return false;
      b.lower = r;
      b.witness = std::move(c);
      return true;
    });
  }
  return b;
}

}  // namespace kmr
