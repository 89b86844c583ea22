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

#include "kmr/geometry/isomorphism.h"

#include <algorithm>
#include <bit>
#include <functional>

#include "kmr/errors.h"

namespace kmr {

PointSet map_set(const PointMap& f, PointSet s) {
  PointSet out = 0;
  for (size_t i : point_list(s)) out |= PointSet{1} << f[i];
  return out;
}

PointMap compose(const PointMap& g, const PointMap& f) {
  PointMap h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}

PointMap inverse(const PointMap& f) {
  PointMap g(f.size());
  for (size_t i = 0; i < f.size(); ++i) g[f[i]] = i;
  return g;
}

namespace {

bool is_bijection(const PointMap& f, size_t n) {
  if (f.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (size_t x : f) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

IsoCheck check_isomorphism(const ClosureGeometry& g1, const ClosureGeometry& g2, const PointMap& f, int max_size) {
  IsoCheck res;
  size_t n = g1.size();
  if (g2.size() != n || !is_bijection(f, n)) {
    res.ok = false;
    return res;
  }
  auto test = [&](PointSet a) {
    if (map_set(f, g1.cl(a)) != g2.cl(map_set(f, a))) {
      res.ok = false;
      res.witness = a;
      return false;
    }
    return true;
  };
  if (n <= 14) {
    res.exhaustive = true;
    for (PointSet a = 0;; ++a) {
      if (!test(a)) return res;
      if (a == g1.full()) break;
    }
    return res;
  }
  std::function<bool(size_t, PointSet, int)> rec = [&](size_t start, PointSet cur, int left) {
    if (!test(cur)) return false;
    if (left == 0) return true;
    for (size_t i = start; i < n; ++i)
      if (!rec(i + 1, cur | (PointSet{1} << i), left - 1)) return false;
    return true;
  };
  rec(0, 0, max_size);
  return res;
}

PointMap transfer_isomorphism(const GradedLatticeView& l1, const GradedLatticeView& l2, const std::vector<size_t>& f) {
  size_t m = l1.num_nodes();
  if (l2.num_nodes() != m || !is_bijection(f, m)) throw NotIsomorphism("node map is not a bijection");
  auto contains = [](const GradedLatticeView& l, size_t i, size_t j) {
    return (l.key[i] & l.key[j]) == l.key[i];
  };
  for (size_t i = 0; i < m; ++i) {
    if (l1.rank[i] != l2.rank[f[i]])
      throw NotIsomorphism("rank of " + l1.node_labels[i] + " is not preserved");
    for (size_t j = 0; j < m; ++j)
      if (contains(l1, i, j) != contains(l2, f[i], f[j]))
        throw NotIsomorphism("order between " + l1.node_labels[i] + " and " + l1.node_labels[j] + " is not preserved");
  }
  size_t n = l1.num_points();
  if (l2.num_points() != n) throw NotIsomorphism("different numbers of points");
  PointMap inv2(l2.num_nodes(), SIZE_MAX);
  for (size_t p = 0; p < n; ++p) inv2[l2.point_node[p]] = p;
  PointMap g(n);
  for (size_t p = 0; p < n; ++p) {
    size_t q = inv2[f[l1.point_node[p]]];
    if (q == SIZE_MAX) throw NotIsomorphism("point " + l1.point_labels[p] + " is not sent to a point");
    g[p] = q;
  }
  IsoCheck chk = check_isomorphism(c_construction(l1), c_construction(l2), g);
  if (!chk.ok) throw NotIsomorphism("induced point map does not commute with closures");
  return g;
}

std::optional<PointMap> find_isomorphism(const ClosureGeometry& g1, const ClosureGeometry& g2, int max_size) {
  size_t n = g1.size();
  if (g2.size() != n) return std::nullopt;
  auto signature = [&](const ClosureGeometry& g, size_t p) {
    std::vector<int> s;
    for (size_t q = 0; q < n; ++q)
      if (q != p) s.push_back(std::popcount(g.cl((PointSet{1} << p) | (PointSet{1} << q))));
    std::sort(s.begin(), s.end());
    s.push_back(std::popcount(g.cl(PointSet{1} << p)));
    return s;
  };
  std::vector<std::vector<int>> s1(n), s2(n);
  for (size_t p = 0; p < n; ++p) {
    s1[p] = signature(g1, p);
    s2[p] = signature(g2, p);
  }
  std::vector<std::vector<size_t>> cand(n);
  for (size_t p = 0; p < n; ++p)
    for (size_t q = 0; q < n; ++q)
      if (s1[p] == s2[q]) cand[p].push_back(q);
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return cand[a].size() < cand[b].size(); });
  PointMap f(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  PointSet assigned = 0, image = 0;
  std::optional<PointMap> result;
  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == n) {
      if (check_isomorphism(g1, g2, f, max_size).ok) {
        result = f;
        return true;
      }
      return false;
    }
    size_t p = order[k];
    for (size_t q : cand[p]) {
      if (used[q]) continue;
      f[p] = q;
      bool ok = true;
      std::vector<size_t> done = point_list(assigned);
      for (size_t a = 0; a < done.size() && ok; ++a) {
        PointSet s1p = (PointSet{1} << p) | (PointSet{1} << done[a]);
        ok = (map_set(f, g1.cl(s1p) & (assigned | (PointSet{1} << p))) ==
              (g2.cl(map_set(f, s1p)) & (image | (PointSet{1} << q))));
        for (size_t b = a + 1; b < done.size() && ok; ++b) {
          PointSet t = s1p | (PointSet{1} << done[b]);
          ok = std::popcount(g1.cl(t)) == std::popcount(g2.cl(map_set(f, t)));
        }
      }
      if (ok) {
        used[q] = true;
        assigned |= PointSet{1} << p;
        image |= PointSet{1} << q;
        if (rec(k + 1)) return true;
        used[q] = false;
        assigned &= ~(PointSet{1} << p);
        image &= ~(PointSet{1} << q);
      }
      f[p] = SIZE_MAX;
    }
    return false;
  };
  rec(0);
  return result;
}

}  // namespace kmr
