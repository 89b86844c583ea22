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

#include "kmr/geometry/axioms.h"

#include <random>
#include <set>

namespace kmr {

namespace {

void fail(AxiomResult& r, PointSet a, std::optional<size_t> x, std::optional<size_t> y, std::string msg) {
  if (!r.pass) return;
  r.pass = false;
  r.witness = AxiomWitness{a, x, y, std::move(msg)};
}

void check_set(const ClosureGeometry& g, PointSet a, AxiomReport& rep) {
  PointSet c = g.cl(a);
  if ((c & a) != a) fail(rep.closure, a, std::nullopt, std::nullopt, "A is not contained in cl(A)");
  if (g.cl(c) != c) fail(rep.closure, a, std::nullopt, std::nullopt, "cl(cl(A)) differs from cl(A)");
  for (size_t x = 0; x < g.size(); ++x) {
    PointSet bx = PointSet{1} << x;
    if (a & bx) continue;
    PointSet cx = g.cl(a | bx);
    if ((cx & c) != c) fail(rep.closure, a, x, std::nullopt, "cl(A) is not contained in cl(A + b)");
    // Exchange: y in cl(A + x) \ cl(A) implies x in cl(A + y).
    for (size_t y = 0; y < g.size(); ++y) {
      PointSet by = PointSet{1} << y;
      if (!(cx & by) || (c & by)) continue;
      if (!(g.cl(a | by) & bx)) fail(rep.exchange, a, y, x, "a in cl(A + b) \\ cl(A) but b not in cl(A + a)");
    }
  }
}

}  // namespace

AxiomReport check_axioms(const ClosureGeometry& g, const AxiomOptions& opt) {
  AxiomReport rep;
  size_t n = g.size();
  if (g.cl(0) != 0) fail(rep.geometry, 0, std::nullopt, std::nullopt, "cl of the empty set is not empty");
  for (size_t x = 0; x < n; ++x)
    if (g.cl(PointSet{1} << x) != (PointSet{1} << x))
      fail(rep.geometry, PointSet{1} << x, x, std::nullopt, "cl({a}) differs from {a}");
  if (n <= opt.exhaustive_limit) {
    rep.exhaustive = true;
    for (PointSet a = 0; a <= g.full(); ++a) {
      check_set(g, a, rep);
      ++rep.subsets_checked;
      if (a == g.full()) break;
    }
    return rep;
  }
  std::set<PointSet> todo;
  for (size_t x = 0; x < n; ++x)
    for (size_t y = x; y < n; ++y) {
      PointSet s = (PointSet{1} << x) | (PointSet{1} << y);
      todo.insert(s);
      todo.insert(g.cl(s));
    }
  todo.insert(0);
  std::mt19937_64 rng(opt.seed);
  for (size_t k = 0; k < opt.samples; ++k) {
    // Sizes spread evenly up to n.
    size_t size = 1 + rng() % n;
    PointSet s = 0;
    while (static_cast<size_t>(__builtin_popcountll(s)) < size) s |= PointSet{1} << (rng() % n);
    todo.insert(s);
  }
  for (PointSet a : todo) {
    check_set(g, a, rep);
    ++rep.subsets_checked;
  }
  return rep;
}

namespace {

Json result_json(const AxiomResult& r, const ClosureGeometry& g) {
  Json j{{"pass", r.pass}};
  if (r.witness) {
    Json a = Json::array();
    for (size_t p : point_list(r.witness->set)) a.push_back(g.labels()[p]);
    Json w{{"A", a}, {"message", r.witness->message}};
    if (r.witness->a) w["a"] = g.labels()[*r.witness->a];
    if (r.witness->b) w["b"] = g.labels()[*r.witness->b];
    j["witness"] = w;
  }
  return j;
}

}  // namespace

Json to_json(const AxiomReport& r, const ClosureGeometry& g) {
  return Json{{"closure", result_json(r.closure, g)},
              {"geometry", result_json(r.geometry, g)},
              {"exchange", result_json(r.exchange, g)},
              {"finite_character", r.finite_character},
              {"exhaustive", r.exhaustive},
              {"subsets_checked", r.subsets_checked}};
}

}  // namespace kmr
