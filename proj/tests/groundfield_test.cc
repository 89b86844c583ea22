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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "kmr/errors.h"
#include "kmr/groundfield/json_io.h"
#include "kmr/groundfield/roots.h"
#include "kmr/groundfield/valuation.h"
#include "test_util.h"

using namespace kmr;
using kmr::testing::all_elements;
using kmr::testing::rf;

TEST_CASE("tower_embed trivial cases") {
  const Tower& t = Tower::get(3);
  GroundElem one = tower_embed(GroundElem::one(t), 6);
  CHECK(one.level() == 6);
  CHECK(one.is_one());
  GroundElem zero = tower_embed(GroundElem(t, 2, {0, 0}), 4);
  CHECK(zero.level() == 4);
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(tower_embed(GroundElem::generator(t, 2), 3), LevelError);
}

TEST_CASE("tower_embed preserves the order of a generator of F_9^x") {
  const Tower& t = Tower::get(3);
  GroundElem g;
  for (const auto& x : all_elements(t, 2)) {
    if (!x.is_zero() && multiplicative_order(x) == 8) {
      g = x;
      break;
    }
  }
  REQUIRE(g.valid());
  GroundElem h = tower_embed(g, 4);
  CHECK(h.level() == 4);
  // Order computed by repeated multiplication, independent of the library.
  GroundElem acc = h;
  int order = 1;
  while (!acc.is_one()) {
    acc = acc * h;
    ++order;
  }
  CHECK(order == 8);
  CHECK(tower_project(h, 2) == g);
}

TEST_CASE("tower_embed is a ring homomorphism on random pairs") {
  std::mt19937_64 rng(11);
  const uint32_t levels[] = {1, 2, 6, 12};
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    const Tower& t = Tower::get(p);
    for (int i = 0; i < 125; ++i) {
      uint32_t lx = levels[rng() % 3];
      uint32_t target = levels[1 + rng() % 3];
      if (target % lx) target = 12;
      GroundElem x = GroundElem::random(t, lx, rng), y = GroundElem::random(t, lx, rng);
      CHECK(tower_embed(x + y, target) == tower_embed(x, target) + tower_embed(y, target));
      CHECK(tower_embed(x * y, target) == tower_embed(x, target) * tower_embed(y, target));
      CHECK(tower_project(tower_embed(x, target), lx) == x);
    }
  }
}

TEST_CASE("ground arithmetic across levels") {
  const Tower& t = Tower::get(5);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    GroundElem a = GroundElem::random(t, 2, rng), b = GroundElem::random(t, 6, rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b) / b == a);
    CHECK((a + b) - a == b);
    CHECK(a * a.inverse() == GroundElem::one(t));
    // Frobenius of order m fixes F_{p^m}.
    CHECK(a.pow(BigInt(25)) == a);
  }
  CHECK(GroundElem::from_int(t, 7) == GroundElem::from_int(t, 2));
  CHECK(GroundElem::from_int(t, -1).prime_field_value() == 4);
}

TEST_CASE("ell_th_root examples") {
  const Tower& t7 = Tower::get(7);
  CHECK(ell_th_root(GroundElem::one(t7), 3).pow_int(3).is_one());
  GroundElem g = GroundElem::from_int(t7, 3);  // 3 generates F_7^x
  REQUIRE(multiplicative_order(g) == 6);

  // Exhaustive oracle: no cube root of g in F_49, exactly three in F_343.
  int in49 = 0, in343 = 0;
  for (const auto& y : all_elements(t7, 2)) in49 += y.pow_int(3) == g;
  std::vector<GroundElem> roots343;
  for (const auto& y : all_elements(t7, 3))
    if (y.pow_int(3) == g) roots343.push_back(y);
  in343 = static_cast<int>(roots343.size());
  CHECK(in49 == 0);
  CHECK(in343 == 3);
  for (const auto& y : roots343) CHECK(multiplicative_order(y) == 18);

  GroundElem y = ell_th_root(g, 3);
  CHECK(y.pow_int(3) == g);
  CHECK(multiplicative_order(y) == 18);
  CHECK(std::find(roots343.begin(), roots343.end(), y) != roots343.end());

  GroundElem g2 = g * g;
  int cubes = 0;
  for (const auto& z : all_elements(t7, 3)) cubes += z.pow_int(3) == g2;
  CHECK(cubes == 3);
  CHECK(ell_th_root(g2, 3).pow_int(3) == g2);

  CHECK_THROWS_AS(ell_th_root(GroundElem::zero(t7), 3), ZeroError);
}

TEST_CASE("ell_th_root property") {
  std::mt19937_64 rng(5);
  for (uint32_t p : {2u, 7u, 11u}) {
    const Tower& t = Tower::get(p);
    for (uint32_t ell : {3u, 5u}) {
      for (int i = 0; i < 200; ++i) {
        uint32_t lv = (i % 3 == 0) ? 2 : 1;
        GroundElem x = GroundElem::random(t, lv, rng);
        if (x.is_zero()) continue;
        CHECK(ell_th_root(x, ell).pow_int(ell) == x);
      }
    }
  }
}

namespace {

// Evaluates a univariate polynomial (in t1) at every element of F_{p^m} and
// returns the roots found.
std::vector<GroundElem> brute_roots(const SparsePoly& f, uint32_t m) {
  std::vector<GroundElem> out;
  for (const auto& a : all_elements(f.tower(), m))
    if (f.evaluate({a}).is_zero()) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("univariate_roots examples") {
  const Tower& t5 = Tower::get(5);
  auto r = univariate_roots(rf(t5, 1, "t1^2 - 1").num());
  REQUIRE(r.size() == 2);
  CHECK(r[0].root == GroundElem::from_int(t5, 1));
  CHECK(r[1].root == GroundElem::from_int(t5, 4));
  CHECK(r[0].mult == 1);
  CHECK(brute_roots(rf(t5, 1, "t1^2 - 1").num(), 1).size() == 2);

  const Tower& t3 = Tower::get(3);
  auto r3 = univariate_roots(rf(t3, 1, "t1^3").num());
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].root.is_zero());
  CHECK(r3[0].mult == 3);

  SparsePoly q = rf(t3, 1, "t1^2 + 1").num();  // irreducible over F_3
  CHECK(brute_roots(q, 1).empty());
  auto rq = univariate_roots(q);
  REQUIRE(rq.size() == 2);
  auto brute = brute_roots(q, 2);
  REQUIRE(brute.size() == 2);
  for (const auto& x : rq) {
    CHECK(x.root.level() == 2);
    CHECK(std::find(brute.begin(), brute.end(), x.root) != brute.end());
  }
  CHECK_THROWS_AS(univariate_roots(SparsePoly(t3, 1)), ZeroPolyError);
}

TEST_CASE("univariate_roots agrees with exhaustive evaluation") {
  std::mt19937_64 rng(17);
  for (uint32_t p : {3u, 5u}) {
    const Tower& t = Tower::get(p);
    for (int iter = 0; iter < 40; ++iter) {
      int deg = 1 + static_cast<int>(rng() % 6);
      std::vector<Term> terms;
      for (int k = 0; k <= deg; ++k) {
        Monomial e = monomial_zero();
        e[0] = static_cast<uint16_t>(k);
        GroundElem c = k == deg ? GroundElem::one(t) : GroundElem::random(t, 1, rng);
        terms.push_back({e, c});
      }
      SparsePoly f = SparsePoly::from_terms(t, 1, terms);
      auto roots = univariate_roots(f, 0);
      uint32_t total = 0;
      for (const auto& r : roots) total += r.mult;
      CHECK(total == static_cast<uint32_t>(deg));
      // Product of linear factors reproduces f.
      SparsePoly prod = SparsePoly::constant(t, 1, 1);
      for (const auto& r : roots)
        for (uint32_t k = 0; k < r.mult; ++k)
          prod = prod * (SparsePoly::variable(t, 1, 0) - SparsePoly::constant(t, 1, r.root));
      CHECK(prod == f);
      for (uint32_t m : {1u, 2u, 3u}) {
        auto brute = brute_roots(f, m);
        size_t in_field = 0;
        for (const auto& r : roots) in_field += r.root.pow(big_pow(p, m)) == r.root;
        CHECK(brute.size() == in_field);
      }
    }
  }
}

TEST_CASE("order_and_residue examples") {
  const Tower& t = Tower::get(7);
  GroundElem zero = GroundElem::zero(t);
  auto a = order_and_residue(rf(t, 2, "t1^2*t2"), coord_valuation(0, zero));
  CHECK(a.order == 2);
  CHECK(a.residue == rf(t, 2, "t2"));

  auto b = order_and_residue(rf(t, 2, "(t1 - 1)/(t1 + 1)"), coord_valuation(0, GroundElem::one(t)));
  CHECK(b.order == 1);
  CHECK(b.residue.is_constant());
  CHECK(b.residue.constant_value() == GroundElem::from_int(t, 2).inverse());

  auto c = order_and_residue(rf(t, 2, "t2 + 3"), coord_valuation(0, zero));
  CHECK(c.order == 0);
  CHECK(c.residue == rf(t, 2, "t2 + 3"));

  auto d = order_and_residue(rf(t, 2, "(t1^3 + t2)/(2*t1)"), coord_valuation_at_infinity(0));
  CHECK(d.order == -2);
  CHECK(d.residue == rf(t, 2, "4"));

  CHECK(valuation_order(rf(t, 2, "t1"), coord_valuation(0, zero, 3)) == 3);
  CHECK_THROWS_AS(order_and_residue(rf(t, 2, "0"), coord_valuation(0, zero)), ZeroInputError);
}

TEST_CASE("order_and_residue is a discrete valuation") {
  std::mt19937_64 rng(23);
  const Tower& t = Tower::get(5);
  for (int i = 0; i < 300; ++i) {
    RatFunc f = kmr::testing::random_ratfunc(t, 2, 2, 3, 1, rng);
    RatFunc g = kmr::testing::random_ratfunc(t, 2, 2, 3, 1, rng);
    // Bias toward a nontrivial order at the chosen center.
    GroundElem a = GroundElem::random(t, 1, rng);
    CoordValuation v = (i % 5 == 0) ? coord_valuation_at_infinity(static_cast<int>(i % 2))
                                    : coord_valuation(static_cast<int>(i % 2), a);
    RatFunc pi = canonical_uniformizer(v, t, 2);
    f = f * pi.pow(static_cast<int64_t>(rng() % 3));
    int64_t vf = valuation_order(f, v), vg = valuation_order(g, v);
    CHECK(valuation_order(f * g, v) == vf + vg);
    RatFunc s = f + g;
    if (!s.is_zero()) CHECK(valuation_order(s, v) >= std::min(vf, vg));
    auto rfv = order_and_residue(f, v);
    CHECK(!rfv.residue.is_zero());
    CHECK(rfv.residue.support() == (rfv.residue.support() & ~(1u << v.var)));
  }
}

TEST_CASE("rational function canonical form and equality") {
  const Tower& t = Tower::get(7);
  RatFunc a = rf(t, 2, "(t1^2 - t2^2)/(t1 - t2)");
  CHECK(a.structurally_equal(rf(t, 2, "t1 + t2")));
  RatFunc b = rf(t, 2, "(t1*t2)/(3*t1^2)");
  CHECK(b.den().leading_coef().is_one());
  CHECK(b == rf(t, 2, "t2/(3*t1)"));
  CHECK(rf(t, 2, "(2*t1+2)/(t1+1)").is_constant());
  CHECK(!rf(t, 2, "t1/(t1+1)").is_constant());
  CHECK(rf(t, 2, "5*t1 + 5").unit_normalized() == rf(t, 2, "t1 + 1"));
  CHECK(rf(t, 2, "t1^7").pth_root() == rf(t, 2, "t1"));
  CHECK_THROWS_AS(rf(t, 2, "t3"), ParseError);
  CHECK_THROWS_AS(rf(t, 2, "t1 +"), ParseError);
}

TEST_CASE("sparse polynomial ring laws") {
  std::mt19937_64 rng(29);
  const Tower& t = Tower::get(3);
  for (int i = 0; i < 60; ++i) {
    auto f = kmr::testing::random_poly(t, 3, 2, 4, 2, rng);
    auto g = kmr::testing::random_poly(t, 3, 2, 4, 1, rng);
    auto h = kmr::testing::random_poly(t, 3, 2, 4, 1, rng);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * (g + h) == f * g + f * h);
    if (!g.is_zero()) CHECK((f * g).divide_exact(g) == f);
  }
}

TEST_CASE("json encodings round-trip") {
  const Tower& t = Tower::get(5);
  std::mt19937_64 rng(31);
  GroundElem x = GroundElem::random(t, 6, rng);
  CHECK(ground_elem_from_json(to_json(x), t) == x);
  Json j = to_json(GroundElem::one(t));
  CHECK(j["level"] == 1);
  RatFunc f = rf(t, 3, "(t1 + [1,2]@2*t2)/(t3^2 - 1)");
  CHECK(rat_func_from_json(to_json(f), t, 3) == f);
  CoordValuation v = coord_valuation(1, x, 2);
  CHECK(coord_valuation_from_json(to_json(v), t) == v);
  Json side = tower_sidecar(t);
  CHECK(&tower_from_sidecar(side) == &t);
}

TEST_CASE("tower seeds give different but consistent models") {
  const Tower& a = Tower::get(7, 1);
  const Tower& b = Tower::get(7, 2);
  GroundElem ga = ell_th_root(GroundElem::from_int(a, 3), 3);
  GroundElem gb = ell_th_root(GroundElem::from_int(b, 3), 3);
  CHECK(multiplicative_order(ga) == multiplicative_order(gb));
  Json side = tower_sidecar(Tower::get(7, 99));
  CHECK(side == tower_sidecar(tower_from_sidecar(side)));
}
