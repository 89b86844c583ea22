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

#include "kmr/abc/cohomology.h"

#include <deque>

#include "kmr/errors.h"

namespace kmr {

namespace {

using Sparse = std::vector<std::pair<uint32_t, uint32_t>>;

struct ElemGroup {
  size_t n;
  uint32_t ell;
  size_t order;
  std::vector<uint32_t> add;  // add[a * order + b]
  std::vector<uint32_t> gen;  // index of e_i

  ElemGroup(size_t n_, uint32_t ell_) : n(n_), ell(ell_), order(1) {
    for (size_t i = 0; i < n; ++i) order *= ell;
    for (size_t i = 0, p = 1; i < n; ++i, p *= ell) gen.push_back(static_cast<uint32_t>(p));
    add.resize(order * order);
    for (size_t a = 0; a < order; ++a)
      for (size_t b = 0; b < order; ++b) {
        size_t s = 0, x = a, y = b, p = 1;
        for (size_t i = 0; i < n; ++i, p *= ell) {
          s += ((x % ell + y % ell) % ell) * p;
          x /= ell;
          y /= ell;
        }
        add[a * order + b] = static_cast<uint32_t>(s);
      }
  }
  uint32_t sum(size_t a, size_t b) const { return add[a * order + b]; }
  uint32_t digit(size_t a, size_t i) const { return static_cast<uint32_t>(a / gen[i] % ell); }
  uint32_t linear(const Vec& x, size_t a) const {
    uint64_t s = 0;
    for (size_t i = 0; i < n; ++i) s += uint64_t(x[i]) * digit(a, i);
    return static_cast<uint32_t>(s % ell);
  }
};

void add_into(Sparse& acc, const Sparse& v, uint32_t coef, uint32_t ell) {
  for (auto [i, c] : v) acc.emplace_back(i, static_cast<uint32_t>(uint64_t(c) * coef % ell));
}

// Expresses every cocycle value c(a, b) in the unknowns u_0 = c(0, 0) and
// u_{1 + a n + i} = c(a, e_i).
class CocycleSystem {
 public:
  CocycleSystem(const ElemGroup& g) : g_(g), unknowns_(1 + g.n * g.order) {
    size_t N = g.order;
    parent_.assign(N, UINT32_MAX);
    via_.assign(N, 0);
    std::vector<uint32_t> order;
    std::vector<bool> seen(N, false);
    std::deque<uint32_t> q{0};
    seen[0] = true;
    while (!q.empty()) {
      uint32_t b = q.front();
      q.pop_front();
      order.push_back(b);
      for (size_t i = 0; i < g.n; ++i) {
        uint32_t c = g.sum(b, g.gen[i]);
        if (seen[c]) continue;
        seen[c] = true;
        parent_[c] = b;
        via_[c] = static_cast<uint32_t>(i);
        q.push_back(c);
      }
    }
    expr_.resize(N * N);
    for (size_t a = 0; a < N; ++a)
      for (uint32_t b : order) expr_[a * N + b] = build(a, b);
  }

  size_t unknowns() const { return unknowns_; }
  uint32_t u(size_t a, size_t i) const { return static_cast<uint32_t>(1 + a * g_.n + i); }
  const Sparse& value(size_t a, size_t b) const { return expr_[a * g_.order + b]; }

  Vec dense(const Sparse& s) const {
    Vec v(unknowns_, 0);
    for (auto [i, c] : s) v[i] = (v[i] + c) % g_.ell;
    return v;
  }

  // Unknown coordinates of a full cochain table.
  Vec coordinates(const Vec& table) const {
    size_t N = g_.order;
    Vec v(unknowns_, 0);
    v[0] = table[0];
    for (size_t a = 0; a < N; ++a)
      for (size_t i = 0; i < g_.n; ++i) v[u(a, i)] = table[a * N + g_.gen[i]];
    return v;
  }

  Vec table(const Vec& coords) const {
    size_t N = g_.order;
    Vec t(N * N, 0);
    for (size_t k = 0; k < N * N; ++k) {
      uint64_t s = 0;
      for (auto [i, c] : expr_[k]) s += uint64_t(c) * coords[i];
      t[k] = static_cast<uint32_t>(s % g_.ell);
    }
    return t;
  }

 private:
  Sparse build(size_t a, uint32_t b) const {
    uint32_t ell = g_.ell;
    if (b == 0) return {{0, 1}};
    uint32_t bp = parent_[b], i = via_[b];
    if (bp == 0) return {{u(a, i), 1}};
    // c(a, b' + e) = c(a + b', e) + c(a, b') - c(b', e).
    Sparse s{{u(g_.sum(a, bp), i), 1}};
    add_into(s, expr_[a * g_.order + bp], 1, ell);
    s.emplace_back(u(bp, i), ell - 1);
    return s;
  }

  const ElemGroup& g_;
  size_t unknowns_;
  std::vector<uint32_t> parent_, via_;
  std::vector<Sparse> expr_;
};

// Incrementally maintained reduced row echelon basis.
class Echelon {
 public:
  Echelon(size_t cols, uint32_t ell) : cols_(cols), ell_(ell), pivot_of_(cols, -1) {}

  size_t rank() const { return rows_.size(); }

  // Reduces v in place; `support` lists columns where v may be nonzero
  // among the pivots (all columns if empty).
  void reduce(Vec& v, const std::vector<uint32_t>& support = {}) const {
    auto step = [&](size_t col) {
      int r = pivot_of_[col];
      if (r < 0 || v[col] == 0) return;
      uint64_t c = ell_ - v[col];
      const Vec& row = rows_[r];
      for (size_t k = 0; k < cols_; ++k)
        if (row[k]) v[k] = static_cast<uint32_t>((v[k] + c * row[k]) % ell_);
    };
    if (support.empty()) {
      for (size_t col = 0; col < cols_; ++col) step(col);
    } else {
      for (uint32_t col : support) step(col);
    }
  }

  bool insert(Vec v, const std::vector<uint32_t>& support = {}) {
    reduce(v, support);
    size_t p = 0;
    while (p < cols_ && v[p] == 0) ++p;
    if (p == cols_) return false;
    uint64_t inv = mod_inverse(v[p], ell_);
    for (auto& x : v) x = static_cast<uint32_t>(x * inv % ell_);
    for (auto& row : rows_) {
      if (!row[p]) continue;
      uint64_t c = ell_ - row[p];
      for (size_t k = 0; k < cols_; ++k)
        if (v[k]) row[k] = static_cast<uint32_t>((row[k] + c * v[k]) % ell_);
    }
    pivot_of_[p] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  // Basis of {x : row . x = 0 for all rows}.
  std::vector<Vec> kernel() const {
    std::vector<Vec> out;
    for (size_t f = 0; f < cols_; ++f) {
      if (pivot_of_[f] >= 0) continue;
      Vec x(cols_, 0);
      x[f] = 1;
      for (size_t p = 0; p < cols_; ++p) {
        int r = pivot_of_[p];
        if (r >= 0 && rows_[r][f]) x[p] = ell_ - rows_[r][f];
      }
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  size_t cols_;
  uint32_t ell_;
  std::vector<int> pivot_of_;
  std::vector<Vec> rows_;
};

Vec coboundary_table(const ElemGroup& g, size_t x) {
  size_t N = g.order;
  Vec t(N * N, 0);
  auto f = [&](size_t a) -> uint32_t { return a == x ? 1 : 0; };
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b)
      t[a * N + b] = (f(b) + g.ell - f(g.sum(a, b)) + f(a)) % g.ell;
  return t;
}

void check_size(size_t n, uint32_t ell) {
  size_t order = 1;
  for (size_t i = 0; i < n; ++i) {
    order *= ell;
    if (order > 243) throw TooLarge("ell^n exceeds 243");
  }
  if (ell < 2) throw ConfigError("ell must be at least 2");
}

struct Solved {
  std::vector<Vec> cocycles;    // unknown coordinates
  std::vector<Vec> coboundaries;
};

Solved solve(const ElemGroup& g, const CocycleSystem& sys) {
  size_t N = g.order;
  uint32_t ell = g.ell;
  Echelon eq(sys.unknowns(), ell);
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b) {
      uint32_t ab = g.sum(a, b);
      for (size_t i = 0; i < g.n; ++i) {
        // dc(a, b, e) = c(b, e) - c(a + b, e) + c(a, b + e) - c(a, b).
        Sparse s{{sys.u(b, i), 1}, {sys.u(ab, i), ell - 1}};
        add_into(s, sys.value(a, g.sum(b, g.gen[i])), 1, ell);
        add_into(s, sys.value(a, b), ell - 1, ell);
        std::vector<uint32_t> support;
        for (auto [k, c] : s) support.push_back(k);
        eq.insert(sys.dense(s), support);
      }
    }
  Solved out;
  out.cocycles = eq.kernel();
  for (size_t x = 0; x < N; ++x) out.coboundaries.push_back(sys.coordinates(coboundary_table(g, x)));
  return out;
}

}  // namespace

H2Result h2_brute_force(size_t n, uint32_t ell) {
  check_size(n, ell);
  ElemGroup g(n, ell);
  CocycleSystem sys(g);
  Solved s = solve(g, sys);
  H2Result r;
  r.n = n;
  r.ell = ell;
  r.group_order = g.order;
  r.cocycle_dim = s.cocycles.size();
  Echelon b(sys.unknowns(), ell);
  for (const auto& v : s.coboundaries) b.insert(v);
  r.coboundary_dim = b.rank();
  for (const auto& v : s.cocycles)
    if (b.insert(v)) r.basis.push_back(sys.table(v));
  r.dim = r.basis.size();
  if (r.dim + r.coboundary_dim != r.cocycle_dim) throw Mismatch("coboundaries are not all cocycles");
  return r;
}

Vec cup_cocycle(const Vec& x, const Vec& y, uint32_t ell) {
  ElemGroup g(x.size(), ell);
  size_t N = g.order;
  Vec t(N * N);
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b) t[a * N + b] = g.linear(x, a) * g.linear(y, b) % ell;
  return t;
}

Vec bockstein_cocycle(const Vec& x, uint32_t ell) {
  ElemGroup g(x.size(), ell);
  size_t N = g.order;
  Vec t(N * N);
  for (size_t a = 0; a < N; ++a)
    for (size_t b = 0; b < N; ++b) {
      // Lift x to {0, ..., ell - 1}; the coboundary of the lift mod ell^2
      // is divisible by ell.
      uint32_t s = g.linear(x, a) + g.linear(x, b) - g.linear(x, g.sum(a, b));
      t[a * N + b] = s / ell;
    }
  return t;
}

H2Presentation h2_presentation(size_t n, uint32_t ell) {
  check_size(n, ell);
  ElemGroup g(n, ell);
  CocycleSystem sys(g);
  Solved s = solve(g, sys);
  H2Presentation p;
  p.n = n;
  p.ell = ell;
  Echelon b(sys.unknowns(), ell);
  for (const auto& v : s.coboundaries) b.insert(v);
  size_t nb = b.rank();
  p.h2_dim = s.cocycles.size() - nb;

  std::vector<Vec> images;  // domain basis order: x_i (x) x_j, then z_i
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Vec ei(n, 0), ej(n, 0);
      ei[i] = 1;
      ej[j] = 1;
      images.push_back(sys.coordinates(cup_cocycle(ei, ej, ell)));
    }
  for (size_t i = 0; i < n; ++i) {
    Vec ei(n, 0);
    ei[i] = 1;
    images.push_back(sys.coordinates(bockstein_cocycle(ei, ell)));
  }
  auto rank_with = [&](size_t from, size_t to) {
    Echelon e = b;
    size_t r = 0;
    for (size_t k = from; k < to; ++k) r += e.insert(images[k]);
    return r;
  };
  size_t m = images.size();
  p.image_dim = rank_with(0, m);
  p.dec_dim = rank_with(0, n * n);
  p.bockstein_dim = rank_with(n * n, m);
  p.bockstein_in_dec = p.dec_dim + p.bockstein_dim - p.image_dim;

  // Kernel: combinations of the images lying in the coboundaries.
  std::vector<Vec> bb;
  for (const auto& v : s.coboundaries) bb.push_back(v);
  Subspace cob = Subspace::span(bb, sys.unknowns(), ell);
  ModMatrix big(sys.unknowns(), m + cob.dim(), ell);
  for (size_t k = 0; k < m; ++k)
    for (size_t r = 0; r < sys.unknowns(); ++r) big.at(r, k) = images[k][r];
  for (size_t k = 0; k < cob.dim(); ++k)
    for (size_t r = 0; r < sys.unknowns(); ++r) big.at(r, m + k) = cob.basis()[k][r];
  std::vector<Vec> ker;
  for (const Vec& v : big.kernel()) ker.emplace_back(v.begin(), v.begin() + m);
  p.kernel = Subspace::span(ker, m, ell);

  std::vector<Vec> rel;
  uint32_t binom = static_cast<uint32_t>((uint64_t(ell) * (ell - 1) / 2) % ell);
  for (size_t a = 0; a < g.order; ++a) {
    Vec x(n);
    for (size_t i = 0; i < n; ++i) x[i] = g.digit(a, i);
    Vec v(m, 0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) v[i * n + j] = x[i] * x[j] % ell;
    for (size_t i = 0; i < n; ++i) v[n * n + i] = binom * x[i] % ell;
    rel.push_back(v);
  }
  p.relation_span = Subspace::span(rel, m, ell);
  return p;
}

Json to_json(const H2Result& r) {
  Json j;
  j["n"] = r.n;
  j["ell"] = r.ell;
  j["group_order"] = r.group_order;
  j["cocycle_dim"] = r.cocycle_dim;
  j["coboundary_dim"] = r.coboundary_dim;
  j["dim"] = r.dim;
  return j;
}

Json to_json(const H2Presentation& p) {
  Json j;
  j["n"] = p.n;
  j["ell"] = p.ell;
  j["h2_dim"] = p.h2_dim;
  j["image_dim"] = p.image_dim;
  j["dec_dim"] = p.dec_dim;
  j["bockstein_dim"] = p.bockstein_dim;
  j["bockstein_in_dec"] = p.bockstein_in_dec;
  j["surjective"] = p.surjective();
  j["kernel"] = p.kernel.basis();
  j["kernel_matches_relations"] = p.kernel_matches();
  return j;
}

}  // namespace kmr
