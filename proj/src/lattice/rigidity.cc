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

#include "kmr/lattice/rigidity.h"

#include <numeric>

#include "kmr/errors.h"

namespace kmr {

namespace {

std::string vec_string(const Vec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct FragmentData {
  Subspace span;
  ModMatrix member_cols;  // dim x #members
  std::vector<Subspace> tw;
};

// Divisor of a vector of the span, from its member coordinates.
Vec divisor_of(const RigidityFragment& f, const ModMatrix& cols, const Vec& v, uint32_t ell) {
  auto c = cols.solve(v);
  if (!c) throw NotMember("vector " + vec_string(v) + " is not in " + f.label);
  Vec d(f.points.size(), 0);
  for (size_t i = 0; i < c->size(); ++i) d = vec_add(d, vec_scale(f.divisors[i], (*c)[i], ell), ell);
  return d;
}

FragmentData prepare(const RigidityFragment& f, size_t dim, uint32_t ell) {
  if (f.members.empty()) throw ConfigError(f.label + ": no members");
  FragmentData fd;
  fd.span = Subspace::span(f.members, dim, ell);
  fd.member_cols = ModMatrix::from_rows(f.members, dim, ell).transpose();
  if (f.divisors.size() != f.members.size()) throw ConfigError(f.label + ": one divisor per member required");
  // Relations among members must have zero divisor.
  ModMatrix dcols = ModMatrix::from_rows(f.divisors, f.points.size(), ell).transpose();
  for (const Vec& rel : fd.member_cols.kernel())
    if (!vec_is_zero(dcols.apply(rel))) throw ConfigError(f.label + ": divisor map is not well defined");
  for (size_t w = 0; w < f.points.size(); ++w) {
    std::vector<Vec> gens;
    // Kernel of the w-coefficient on the member coordinates.
    Vec row(f.members.size());
    for (size_t i = 0; i < f.members.size(); ++i) row[i] = f.divisors[i][w];
    ModMatrix r = ModMatrix::from_rows({row}, f.members.size(), ell);
    for (const Vec& k : r.kernel()) gens.push_back(fd.member_cols.apply(k));
    fd.tw.push_back(Subspace::span(gens, dim, ell));
  }
  return fd;
}

size_t find(std::vector<size_t>& parent, size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

RigidityResult epsilon_rigidity_check(const ModMatrix& phi, const RigidityModel& model) {
  const uint32_t ell = model.ell;
  const size_t n = model.dim;
  if (phi.rows() != n || phi.cols() != n) throw ConfigError("Phi has the wrong size");
  if (!phi.inverse()) throw ConfigError("Phi is not invertible");
  RigidityResult res;
  std::vector<FragmentData> data;
  for (const auto& f : model.fragments) data.push_back(prepare(f, n, ell));

  for (size_t a = 0; a < data.size(); ++a) {
    const auto& f = model.fragments[a];
    for (const Vec& b : data[a].span.basis())
      if (!data[a].span.contains(phi.apply(b)))
        throw NotPreserving("Phi moves " + vec_string(b) + " out of " + f.label);
    for (size_t w = 0; w < f.points.size(); ++w)
      for (const Vec& b : data[a].tw[w].basis())
        if (!data[a].tw[w].contains(phi.apply(b)))
          throw NotPreserving("Phi moves " + vec_string(b) + " out of the subgroup of " + f.label +
                              " regular at " + f.points[w]);
  }

  // Scalar on each fragment from the action on A / T_w.
  for (size_t a = 0; a < data.size(); ++a) {
    const auto& f = model.fragments[a];
    std::optional<uint32_t> eps;
    size_t eps_point = 0;
    for (size_t w = 0; w < f.points.size(); ++w) {
      for (size_t i = 0; i < f.members.size(); ++i) {
        uint32_t c = f.divisors[i][w];
        if (!c) continue;
        Vec img = divisor_of(f, data[a].member_cols, phi.apply(f.members[i]), ell);
        uint32_t e = static_cast<uint32_t>(uint64_t{img[w]} * mod_inverse(c, ell) % ell);
        if (!eps) {
          eps = e;
          eps_point = w;
        } else if (*eps != e) {
          res.report = CounterexampleReport{"inconsistent_scalars",
                                            f.label + ": Phi acts by " + std::to_string(*eps) + " at " +
                                                f.points[eps_point] + " and by " + std::to_string(e) + " at " +
                                                f.points[w],
                                            {f.label},
                                            {f.points[eps_point], f.points[w]},
                                            {*eps, e},
                                            f.members[i]};
          return res;
        }
        break;
      }
    }
    if (!eps) eps = 1;  // trivial fragment
    for (const Vec& m : f.members) {
      Vec d = vec_sub(phi.apply(m), vec_scale(m, *eps, ell), ell);
      if (!vec_is_zero(d)) {
        res.report = CounterexampleReport{"not_scalar",
                                          f.label + ": Phi is not " + std::to_string(*eps) + " times the identity",
                                          {f.label}, {}, {*eps}, m};
        return res;
      }
    }
    res.fragment_epsilon.push_back(*eps);
  }

  // Links: shared classes, and triangles.
  const size_t k = data.size();
  std::vector<size_t> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](size_t x, size_t y) { parent[find(parent, x)] = find(parent, y); };
  for (size_t a = 0; a < k; ++a)
    for (size_t b = a + 1; b < k; ++b)
      if (data[a].span.intersect(data[b].span).dim() > 0) unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t c = 0; c < k; ++c)
      for (size_t a = 0; a < k; ++a)
        for (size_t b = a + 1; b < k; ++b) {
          if (c == a || c == b) continue;
          size_t ra = find(parent, a), rb = find(parent, b), rc = find(parent, c);
          if (ra == rb && rb == rc) continue;
          Subspace in = data[c].span.intersect(data[a].span.sum(data[b].span));
          if (data[a].span.contains(in) || data[b].span.contains(in)) continue;
          unite(a, b);
          unite(b, c);
          changed = true;
        }
  }
  std::vector<std::vector<size_t>> comps;
  std::vector<int> comp_of(k, -1);
  for (size_t a = 0; a < k; ++a) {
    size_t r = find(parent, a);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].push_back(a);
  }
  res.components = comps;

  for (const auto& comp : comps)
    for (size_t a : comp)
      if (res.fragment_epsilon[a] != res.fragment_epsilon[comp[0]]) {
        const auto& fa = model.fragments[comp[0]];
        const auto& fb = model.fragments[a];
        res.report = CounterexampleReport{"inconsistent_scalars",
                                          "linked fragments " + fa.label + " and " + fb.label +
                                              " carry different scalars",
                                          {fa.label, fb.label}, {}, {res.fragment_epsilon[comp[0]], res.fragment_epsilon[a]},
                                          {}};
        return res;
      }
  for (size_t c = 1; c < comps.size(); ++c) {
    size_t a = comps[0][0], b = comps[c][0];
    if (res.fragment_epsilon[a] != res.fragment_epsilon[b]) {
      const auto& fa = model.fragments[a];
      const auto& fb = model.fragments[b];
      res.report = CounterexampleReport{
          "missing_triangle",
          "no fragment C with C & (" + fa.label + " + " + fb.label + ") outside both links " + fa.label + " and " +
              fb.label + "; the scalars " + std::to_string(res.fragment_epsilon[a]) + " and " +
              std::to_string(res.fragment_epsilon[b]) + " differ",
          {fa.label, fb.label},
          {},
          {res.fragment_epsilon[a], res.fragment_epsilon[b]},
          {}};
      return res;
    }
  }

  uint32_t eps = k ? res.fragment_epsilon[0] : 1;
  Subspace total(n, ell);
  for (const auto& d : data) total = total.sum(d.span);
  res.spans_ambient = total.dim() == n;
  for (size_t i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    Vec d = vec_sub(phi.apply(e), vec_scale(e, eps, ell), ell);
    if (!vec_is_zero(d)) {
      res.report = CounterexampleReport{"not_scalar",
                                        "Phi is not " + std::to_string(eps) +
                                            " times the identity outside the listed fragments",
                                        {}, {}, {eps}, e};
      return res;
    }
  }
  res.epsilon = eps;
  return res;
}

namespace {

// Exponent vector of f over the factor base, growing the base as needed.
std::vector<std::pair<size_t, int64_t>> factor_over(const SparsePoly& f, std::vector<SparsePoly>& base) {
  std::vector<std::pair<size_t, int64_t>> out;
  SparsePoly g = f;
  for (size_t i = 0; i < base.size() && !g.is_constant(); ++i) {
    int64_t e = 0;
    while (auto q = g.divide_exact(base[i])) {
      g = *q;
      ++e;
    }
    if (e) out.emplace_back(i, e);
  }
  if (!g.is_constant()) {
    SparsePoly m = g.monic();
    for (const auto& b : base)
      if (b.divide_exact(m)) throw ConfigError("factor " + m.to_string() + " divides the earlier factor " + b.to_string());
    base.push_back(m);
    out.emplace_back(base.size() - 1, 1);
  }
  return out;
}

}  // namespace

RigidityModel rigidity_model(const std::vector<RationalSubgroup>& subgroups,
                             const std::vector<std::vector<GroundElem>>& points, uint32_t ell) {
  if (subgroups.size() != points.size()) throw ConfigError("one point list per subgroup required");
  std::vector<SparsePoly> base;
  struct Raw {
    std::vector<std::pair<size_t, int64_t>> exps;
  };
  std::vector<std::vector<Raw>> raw(subgroups.size());
  for (size_t a = 0; a < subgroups.size(); ++a) {
    const auto& A = subgroups[a];
    for (const auto& c : points[a]) {
      RatFunc m = A.generator - RatFunc::constant(A.tower(), A.num_vars(), c);
      if (m.is_zero()) throw ConfigError("member x - c vanishes");
      Raw r;
      for (auto [i, e] : factor_over(m.num(), base)) r.exps.emplace_back(i, e);
      for (auto [i, e] : factor_over(m.den(), base)) r.exps.emplace_back(i, -e);
      raw[a].push_back(r);
    }
  }
  RigidityModel model;
  model.ell = ell;
  model.dim = base.size();
  for (const auto& b : base) model.basis_labels.push_back(b.to_string());
  for (size_t a = 0; a < subgroups.size(); ++a) {
    RigidityFragment f;
    f.label = subgroups[a].label;
    for (const auto& c : points[a]) f.points.push_back(c.to_string());
    f.points.push_back("inf");
    size_t np = f.points.size();
    for (size_t i = 0; i < raw[a].size(); ++i) {
      Vec v(model.dim, 0);
      for (auto [j, e] : raw[a][i].exps) v[j] = static_cast<uint32_t>((v[j] + mod_reduce(e, ell)) % ell);
      f.members.push_back(v);
      Vec d(np, 0);
      d[i] = 1;
      d[np - 1] = ell - 1;
      f.divisors.push_back(d);
    }
    model.fragments.push_back(f);
  }
  return model;
}

}  // namespace kmr
