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

#include <random>

#include "kmr/errors.h"
#include "kmr/kmilnor/dimension.h"
#include "kmr/kmilnor/json_io.h"
#include "test_util.h"

using namespace kmr;
using kmr::testing::rf;

namespace {

CoordValuation at(const Tower& t, int var, int64_t a) { return coord_valuation(var, GroundElem::from_int(t, a)); }

ParshinChain chain2(const Tower& t, int nv, int v1, std::optional<int64_t> a1, int v2, std::optional<int64_t> a2) {
  std::optional<GroundElem> c1, c2;
  if (a1) c1 = GroundElem::from_int(t, *a1);
  if (a2) c2 = GroundElem::from_int(t, *a2);
  return coordinate_chain(t, nv, {v1, v2}, {c1, c2});
}

// Degree 2 oracle: the residue of {x, y} at v is the class of the residue
// of y^v(x) / x^v(y); its order at w gives the chain value.
int64_t oracle_chain2(const RatFunc& x, const RatFunc& y, const ParshinChain& c, uint32_t ell) {
  int64_t vx = valuation_order(x, c.steps[0]), vy = valuation_order(y, c.steps[0]);
  RatFunc q = y.pow(vx) / x.pow(vy);
  OrderResidue o = order_and_residue(q, c.steps[0]);
  REQUIRE(o.order == 0);
  int64_t e2 = valuation_order(o.residue, c.steps[1]);
  return mod_reduce(e2, ell);
}

// Products of factors t1 - a, t2 - b, t1 + c t2 + d with small exponents.
RatFunc random_factored(const Tower& t, std::mt19937_64& rng, int nfac) {
  RatFunc r = RatFunc::constant(t, 2, 1 + static_cast<int64_t>(rng() % (t.p() - 1)));
  for (int i = 0; i < nfac; ++i) {
    int64_t a = rng() % 3, b = 1 + rng() % (t.p() - 1);
    RatFunc f;
    switch (rng() % 3) {
      case 0:
        f = rf(t, 2, "t1 - " + std::to_string(a));
        break;
      case 1:
        f = rf(t, 2, "t2 - " + std::to_string(a));
        break;
      default:
        f = rf(t, 2, "t1 + " + std::to_string(b) + "*t2 - " + std::to_string(a));
    }
    int64_t e = static_cast<int64_t>(rng() % 5) - 2;
    if (e == 0) e = 1;
    r = r * f.pow(e);
  }
  return r;
}

}  // namespace

TEST_CASE("tame_step examples") {
  const Tower& t = Tower::get(7);
  CoordValuation v = at(t, 0, 0);
  RatFunc pi = rf(t, 2, "t1");
  auto a = tame_step(Symbol{{rf(t, 2, "t1")}}, 3, v, pi);
  CHECK(a.degree() == 0);
  CHECK(a.scalar_value() == 1);

  auto b = tame_step(Symbol{{rf(t, 2, "t1"), rf(t, 2, "t2")}}, 3, v, pi);
  CHECK(b.degree() == 1);
  CHECK((b - FormalSymbol::from_symbol(Symbol{{rf(t, 2, "t2")}}, 3)).is_zero() == Truth::True);

  auto c = tame_step(Symbol{{rf(t, 2, "t2 + 1"), rf(t, 2, "t2 + 2")}}, 3, v, pi);
  CHECK(c.formally_zero());

  CHECK_THROWS_AS(tame_step(Symbol{{rf(t, 2, "t1")}}, 3, v, rf(t, 2, "t1^2")), NotUniformizer);
  CHECK_THROWS_AS(tame_step(Symbol{{rf(t, 2, "0")}}, 3, v, pi), ZeroEntry);
  // A different uniformizer gives the same residue.
  auto d = tame_step(Symbol{{rf(t, 2, "t1*(t2+1)"), rf(t, 2, "t2")}}, 3, v, rf(t, 2, "t1*(t1+t2+1)"));
  auto d0 = tame_step(Symbol{{rf(t, 2, "t1*(t2+1)"), rf(t, 2, "t2")}}, 3, v, pi);
  CHECK((d - d0).is_zero() == Truth::True);
}

TEST_CASE("tame_chain examples") {
  const Tower& t = Tower::get(7);
  ParshinChain c = chain2(t, 2, 0, 0, 1, 0);
  CHECK(tame_chain(Symbol{{rf(t, 2, "t1"), rf(t, 2, "t2")}}, 3, c).scalar_value() == 1);
  CHECK(tame_chain(Symbol{{rf(t, 2, "t2"), rf(t, 2, "t1")}}, 3, c).scalar_value() == 2);

  for (int d = 1; d <= 5; ++d) {
    std::vector<int> vars;
    std::vector<std::optional<GroundElem>> centers;
    Symbol s;
    for (int i = 0; i < d; ++i) {
      vars.push_back(i);
      centers.push_back(GroundElem::from_int(t, i + 2));
      s.entries.push_back(rf(t, d, "t" + std::to_string(i + 1) + " - " + std::to_string(i + 2)));
    }
    ParshinChain cc = coordinate_chain(t, d, vars, centers);
    CHECK_NOTHROW(cc.validate());
    CHECK(tame_chain(s, 5, cc).scalar_value() == 1);
  }
}

TEST_CASE("chain validation") {
  const Tower& t = Tower::get(5);
  ParshinChain c = chain2(t, 2, 0, 1, 0, 2);
  CHECK_THROWS_AS(c.validate(), ConfigError);
  ParshinChain bad = chain2(t, 2, 0, 1, 1, 2);
  bad.uniformizers[1] = rf(t, 2, "(t2 - 2)*(t1 - 1)");
  CHECK_THROWS_AS(bad.validate(), NotUniformizer);
  // t2 - 2 + (t1 - 1) restricts to t2 - 2 on the residue field of t1 = 1.
  ParshinChain ok = chain2(t, 2, 0, 1, 1, 2);
  ok.uniformizers[1] = rf(t, 2, "t2 - 2 + t1 - 1");
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("monomial_pullback examples") {
  const Tower& t = Tower::get(7);
  ParshinChain c = chain2(t, 2, 0, 0, 1, 0);
  Symbol s{{rf(t, 2, "t1"), rf(t, 2, "t2")}};
  ParshinChain c21 = monomial_pullback(c, {2, 1});
  CHECK(tame_chain(s, 3, c21).scalar_value() == 2);
  CHECK(!c21.ell_ramified(3));
  CHECK(tame_chain(s, 3, monomial_pullback(c, {1, 1})).scalar_value() == tame_chain(s, 3, c).scalar_value());

  ParshinChain c1 = coordinate_chain(t, 1, {0}, {GroundElem::zero(t)});
  ParshinChain c3 = monomial_pullback(c1, {3});
  CHECK(tame_chain(Symbol{{rf(t, 1, "t1")}}, 3, c3).scalar_value() == 0);
  CHECK(c3.ell_ramified(3));
  CHECK_THROWS_AS(monomial_pullback(c1, {0}), BadExponent);
  CHECK_THROWS_AS(monomial_pullback(c1, {7}), BadExponent);
  CHECK_THROWS_AS(monomial_pullback(c1, {1, 1}), BadExponent);
}

TEST_CASE("certificate_search examples") {
  const Tower& t = Tower::get(7);
  CertOptions opt;
  opt.ell = 3;
  std::vector<RatFunc> coords;
  for (int i = 1; i <= 5; ++i) coords.push_back(rf(t, 5, "t" + std::to_string(i)));
  auto c = certificate_search(coords, opt);
  REQUIRE(c);
  CHECK(c->trial == 0);
  CHECK(c->shift.empty());
  CHECK(c->value != 0);
  CHECK(c->replay());

  auto z = certificate_search({rf(t, 2, "t1"), rf(t, 2, "t1^2*(t2+1)^3")}, opt);
  CHECK(!z);
  // Shifted statements {x - a, y - b} of independent x, y are nonzero.
  CertOptions shifted = opt;
  shifted.allow_shifts = true;
  auto zs = certificate_search({rf(t, 2, "t1"), rf(t, 2, "t1^2*(t2+1)^3")}, shifted);
  REQUIRE(zs);
  CHECK(zs->trial > 0);
  CHECK(zs->replay());

  auto xz = certificate_search({rf(t, 2, "t1"), rf(t, 2, "t2")}, opt);
  REQUIRE(xz);
  CHECK(xz->replay());

  opt.budget = 0;
  CHECK(!certificate_search(coords, opt));
}

TEST_CASE("certificate_search is independent of worker count") {
  const Tower& t = Tower::get(5);
  std::vector<RatFunc> xs{rf(t, 3, "t1*t2 + 1"), rf(t, 3, "t2 + t3"), rf(t, 3, "t3^2 + t1")};
  CertOptions o1;
  o1.ell = 3;
  o1.seed = 42;
  CertOptions o8 = o1;
  o8.workers = 8;
  auto a = certificate_search(xs, o1), b = certificate_search(xs, o8);
  REQUIRE(a.has_value() == b.has_value());
  if (a) {
    CHECK(a->trial == b->trial);
    CHECK(to_json(*a) == to_json(*b));
    CHECK(a->replay());
  }
}

TEST_CASE("milnor_dim_bounds examples") {
  const Tower& t = Tower::get(7);
  CertOptions opt;
  opt.ell = 3;
  auto a = milnor_dim_bounds({rf(t, 2, "t1"), rf(t, 2, "t2")}, 2, opt);
  CHECK(a.lower == 2);
  CHECK(a.upper == 2);
  REQUIRE(a.witness);
  // Oracle: direct evaluation of the coordinate chain at the origin.
  CHECK(tame_chain(Symbol{{rf(t, 2, "t1"), rf(t, 2, "t2")}}, 3, chain2(t, 2, 0, 0, 1, 0)).scalar_value() != 0);

  auto b = milnor_dim_bounds({rf(t, 2, "3"), rf(t, 2, "5")}, 2, opt);
  CHECK(b.lower == 0);
  CHECK(b.upper == 0);

  auto c = milnor_dim_bounds({rf(t, 5, "t1"), rf(t, 5, "t1 + 1")}, 5, opt);
  CHECK(c.lower == 1);
  CHECK(c.upper == 1);

  auto d = milnor_dim_bounds({rf(t, 3, "t1^7"), rf(t, 3, "t2")}, 3, opt, DimMode::Generated);
  CHECK(d.lower == 2);
  CHECK(d.upper == 2);
}

TEST_CASE("Steinberg relation survives every residue") {
  std::mt19937_64 rng(101);
  for (uint32_t p : {7u, 11u}) {
    const Tower& t = Tower::get(p);
    for (uint32_t ell : {3u, 5u}) {
      for (int i = 0; i < 25; ++i) {
        RatFunc f = random_factored(t, rng, 3);
        RatFunc g = RatFunc::constant(t, 2, 1) - f;
        if (g.is_zero() || f.is_constant()) continue;
        Symbol s{{f, g}};
        for (int var = 0; var < 2; ++var) {
          for (int64_t a = 0; a < 3; ++a) {
            CoordValuation v = at(t, var, a);
            CHECK(tame_step(s, ell, v, canonical_uniformizer(v, t, 2)).is_zero() == Truth::True);
            ParshinChain c = chain2(t, 2, var, a, 1 - var, static_cast<int64_t>(rng() % 3));
            CHECK(tame_chain(s, ell, c).scalar_value() == 0);
          }
          CoordValuation vi = coord_valuation_at_infinity(var);
          CHECK(tame_step(s, ell, vi, canonical_uniformizer(vi, t, 2)).is_zero() == Truth::True);
        }
        CHECK(!certify_symbol(s, ell));
      }
    }
  }
}

TEST_CASE("tame_chain agrees with the degree 2 oracle and is multilinear") {
  std::mt19937_64 rng(202);
  const Tower& t = Tower::get(7);
  int nontrivial = 0;
  for (int i = 0; i < 200; ++i) {
    RatFunc x = random_factored(t, rng, 3), y = random_factored(t, rng, 2), z = random_factored(t, rng, 3);
    if (x.is_constant() || y.is_constant() || z.is_constant()) continue;
    int v1 = static_cast<int>(rng() % 2);
    ParshinChain c = chain2(t, 2, v1, static_cast<int64_t>(rng() % 3), 1 - v1,
                            rng() % 4 ? std::optional<int64_t>(rng() % 3) : std::nullopt);
    uint32_t xz = tame_chain(Symbol{{x, z}}, 3, c).scalar_value();
    uint32_t yz = tame_chain(Symbol{{y, z}}, 3, c).scalar_value();
    uint32_t xyz = (x * y).is_constant() ? 0 : tame_chain(Symbol{{x * y, z}}, 3, c).scalar_value();
    CHECK(xyz == (xz + yz) % 3);
    CHECK(xz == oracle_chain2(x, z, c, 3));
    CHECK(tame_chain(Symbol{{z, x}}, 3, c).scalar_value() == (3 - xz) % 3);
    nontrivial += xz != 0;
  }
  CHECK(nontrivial > 20);
}

TEST_CASE("ramification multiplies chain values") {
  std::mt19937_64 rng(303);
  const Tower& t = Tower::get(7);
  for (int i = 0; i < 60; ++i) {
    RatFunc x = random_factored(t, rng, 3), y = random_factored(t, rng, 3);
    if (x.is_constant() || y.is_constant()) continue;
    ParshinChain c = chain2(t, 2, 0, static_cast<int64_t>(rng() % 3), 1, static_cast<int64_t>(rng() % 3));
    const int64_t es[] = {1, 2, 4};
    int64_t e1 = es[rng() % 3], e2 = es[rng() % 3];
    Symbol s{{x, y}};
    uint32_t base = tame_chain(s, 3, c).scalar_value();
    CHECK(tame_chain(s, 3, monomial_pullback(c, {e1, e2})).scalar_value() == (base * e1 * e2) % 3);
    ParshinChain r = monomial_pullback(c, {3, e2});
    CHECK(r.ell_ramified(3));
    CHECK(tame_chain(s, 3, r).scalar_value() == 0);
  }
  // Unit-augmented symbols over k(t1,t2,t3): residue symbols scale by e1 e2.
  for (int i = 0; i < 20; ++i) {
    int64_t e1 = 1 + rng() % 4, e2 = 1 + rng() % 4;
    if (e1 == 7 || e2 == 7) continue;
    Symbol s{{rf(t, 3, "t1"), rf(t, 3, "t2 - 1"), rf(t, 3, "t3 + t1 + 2")}};
    ParshinChain c = coordinate_chain(t, 3, {0, 1}, {GroundElem::zero(t), GroundElem::one(t)});
    FormalSymbol base = tame_chain(s, 5, c);
    FormalSymbol up = tame_chain(s, 5, monomial_pullback(c, {e1, e2}));
    CHECK((up - base.scaled(e1 * e2)).is_zero() == Truth::True);
    CHECK(base.is_zero() == Truth::False);
  }
}

TEST_CASE("chain restriction and certificate replay") {
  std::mt19937_64 rng(404);
  const Tower& t = Tower::get(5);
  int found = 0;
  for (int i = 0; i < 40; ++i) {
    Symbol s;
    for (int k = 0; k < 3; ++k) s.entries.push_back(kmr::testing::random_ratfunc(t, 3, 1, 2, 1, rng));
    bool skip = false;
    for (auto& e : s.entries) skip |= e.is_constant();
    if (skip) continue;
    auto cert = certify_symbol(s, 3);
    found += cert.has_value();
    if (cert) {
      CHECK(cert->replay());
      for (size_t k = 1; k < 3; ++k) {
        FormalSymbol part = tame_chain(s, 3, cert->chain.prefix(k));
        CHECK(tame_chain(part, cert->chain.suffix(k)).scalar_value() == cert->value);
      }
    }
  }
  CHECK(found > 5);
}

TEST_CASE("kmilnor json round-trip") {
  const Tower& t = Tower::get(7);
  CertOptions opt;
  auto c = certificate_search({rf(t, 3, "t1 + t2"), rf(t, 3, "t3"), rf(t, 3, "t2")}, opt);
  REQUIRE(c);
  Certificate back = certificate_from_json(to_json(*c), t, 3);
  CHECK(back.replay());
  CHECK(to_json(back) == to_json(*c));
}
