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
#include "kmr/lattice/lattice_fragment.h"
#include "oracles.h"
#include "test_util.h"

using namespace kmr;
using kmr::testing::rf;

namespace {

GroundElem gi(const Tower& t, int64_t a) { return GroundElem::from_int(t, a); }

P1Point pt(const Tower& t, int64_t a) { return P1Point{gi(t, a)}; }

std::vector<RationalSubgroup> universe(const Tower& t, int nv, const std::vector<std::string>& src) {
  std::vector<RationalSubgroup> out;
  for (const auto& s : src) out.push_back(rational_subgroup(s, rf(t, nv, s)));
  return out;
}

std::set<Mask> masks(const std::vector<FlatRecord>& v) {
  std::set<Mask> s;
  for (const auto& f : v) s.insert(f.members);
  return s;
}

// Maximal subsets with certified dimension exactly r, by brute force over
// all subsets.
std::set<Mask> brute_force_rank_r(const std::vector<RationalSubgroup>& U, int r, uint32_t ell) {
  size_t n = U.size();
  std::vector<int> dim(size_t{1} << n, -1);
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    std::vector<RatFunc> g;
    for (size_t i : mask_indices(m)) g.push_back(U[i].generator);
    CertOptions o;
    o.ell = ell;
    DimBounds b = milnor_dim_bounds(g, static_cast<int>(g.size()), o, DimMode::Generated);
    REQUIRE(b.exact());
    dim[m] = b.lower;
  }
  std::set<Mask> out;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    if (dim[m] != r) continue;
    bool maximal = true;
    for (Mask s = 1; s < (Mask{1} << n); ++s)
      if ((s & m) == m && s != m && dim[s] == r) maximal = false;
    if (maximal) out.insert(m);
  }
  return out;
}

}  // namespace

TEST_CASE("div_ell examples") {
  const Tower& t = Tower::get(7);
  RationalSubgroup A = rational_subgroup("k(t1)", rf(t, 3, "t1"));
  Divisor d1 = div_ell(rf(t, 1, "(t1-1)/(t1-2)"), A, 3);
  CHECK(d1 == Divisor{{pt(t, 1), 1}, {pt(t, 2), 2}});
  Divisor d2 = div_ell(rf(t, 1, "t1"), A, 3);
  CHECK(d2 == Divisor{{pt(t, 0), 1}, {P1Point{}, 2}});
  CHECK(div_ell(rf(t, 1, "(t1-1)^3"), A, 3).empty());
  CHECK(div_ell(rf(t, 1, "(t1-1)^5"), A, 5).empty());
  // A coordinate subgroup accepts elements of K in its variable.
  CHECK(div_ell(rf(t, 3, "(t1-1)/(t1-2)"), A, 3) == d1);
  CHECK_THROWS_AS(div_ell(rf(t, 3, "t1*t2"), A, 3), NotMember);
  RationalSubgroup B = rational_subgroup("k(z)", rf(t, 3, "(t1+1)/(t2+2)"));
  CHECK_THROWS_AS(div_ell(rf(t, 3, "t1"), B, 3), NotMember);
  CHECK_THROWS_AS(div_ell(rf(t, 1, "0"), A, 3), ZeroInputError);
  CHECK_THROWS_AS(rational_subgroup("c", rf(t, 3, "2")), ConfigError);
}

TEST_CASE("div_ell is a homomorphism onto sum-zero divisors") {
  const Tower& t = Tower::get(11);
  RationalSubgroup A = rational_subgroup("k(t1)", rf(t, 2, "t1"));
  std::mt19937_64 rng(5);
  for (uint32_t ell : {3u, 5u}) {
    for (int k = 0; k < 60; ++k) {
      RatFunc f = kmr::testing::random_ratfunc(t, 1, 3, 3, k % 2 ? 2 : 1, rng);
      RatFunc g = kmr::testing::random_ratfunc(t, 1, 3, 3, 1, rng);
      if (f.is_constant() || g.is_constant()) continue;
      Divisor df = div_ell(f, A, ell), dg = div_ell(g, A, ell), dfg = div_ell(f * g, A, ell);
      CHECK(divisor_degree(df, ell) == 0);
      std::map<P1Point, uint32_t> sum;
      for (auto& [p, c] : df) sum[p] = (sum[p] + c) % ell;
      for (auto& [p, c] : dg) sum[p] = (sum[p] + c) % ell;
      Divisor expect;
      for (auto& [p, c] : sum)
        if (c) expect[p] = c;
      CHECK(dfg == expect);
    }
  }
}

TEST_CASE("divisor basis spans the members") {
  const Tower& t = Tower::get(7);
  RationalSubgroup A = rational_subgroup("k(z)", rf(t, 3, "(t1+1)/(t2+2)"));
  auto basis = A.divisor_basis({pt(t, 0), pt(t, 3), P1Point{}});
  REQUIRE(basis.size() == 2);
  for (const auto& [p, f] : basis) CHECK(div_ell(f, A, 3) == Divisor{{p, 1}, {P1Point{}, 2}});
  CHECK(A.image(A.point_class(pt(t, 0))) == rf(t, 3, "(t1+1)/(t2+2)"));
}

TEST_CASE("omega examples") {
  const Tower& t = Tower::get(7);
  SubgroupFragment f1 = omega({rf(t, 5, "t1")}, "k(t1)");
  CHECK(f1.closure_rank == 1);
  SubgroupFragment f12 = omega({rf(t, 5, "t1"), rf(t, 5, "t2")}, "k(t1,t2)");
  CHECK(f12.closure_rank == 2);
  CertOptions o;
  auto d = distinguish(f12, f1, o);
  REQUIRE(d);
  CHECK(d->first_outside_second);
  CHECK(d->certificate.replay());
  CHECK(d->certificate.statement.degree() == 2);
  SubgroupFragment c = omega({rf(t, 5, "3")});
  CHECK(c.generators.empty());
  CHECK(c.closure_rank == 0);
  CHECK_THROWS_AS(omega({rf(t, 5, "0")}), ZeroInputError);
  // Monotone in the generators.
  SubgroupFragment f = omega({rf(t, 5, "t1"), rf(t, 5, "t1^7"), rf(t, 5, "2*t1")});
  CHECK(f.generators.size() == 1);
}

TEST_CASE("omega fragments of distinct subfields are distinguished") {
  const Tower& t = Tower::get(7);
  std::vector<std::vector<std::string>> fields = {
      {"t1"}, {"t2"}, {"t1*t2"}, {"(t1+1)/(t3+2)"}, {"t1", "t2"}, {"t1", "t3"}, {"t2+t3"}, {"t1", "t2", "t3"},
      {"t4", "t5"}, {"t1", "t2", "t3", "t4"}, {"t5"}, {"t1", "t2", "t3", "t4", "t5"}};
  std::vector<SubgroupFragment> frags;
  for (const auto& g : fields) {
    std::vector<RatFunc> gens;
    for (const auto& s : g) gens.push_back(rf(t, 5, s));
    frags.push_back(omega(gens));
  }
  CertOptions o;
  for (size_t i = 0; i < frags.size(); ++i)
    for (size_t j = i + 1; j < frags.size(); ++j) {
      auto d = distinguish(frags[i], frags[j], o);
      INFO(frags[i].to_string() << " vs " << frags[j].to_string());
      REQUIRE(d);
      CHECK(d->certificate.replay());
    }
}

TEST_CASE("recover_rank_r examples") {
  const Tower& t = Tower::get(7);
  CertOptions o;
  auto U = universe(t, 5, {"t1", "t2", "t3"});
  auto r2 = recover_rank_r(U, 2, o);
  CHECK(masks(r2) == std::set<Mask>{0b011, 0b101, 0b110});
  CHECK(masks(r2) == brute_force_rank_r(U, 2, 3));
  for (const auto& f : r2) {
    CHECK(f.lower.replay());
    CHECK(f.lower.statement.degree() == 2);
    REQUIRE(f.exclusions.size() == 1);
    CHECK(f.exclusions[0].second.replay());
    CHECK(f.exclusions[0].second.statement.degree() == 3);
  }
  CHECK(recover_rank_r(universe(t, 5, {"t1"}), 2, o).empty());
  CHECK(recover_rank_r(universe(t, 5, {"t1", "t1+1"}), 2, o).empty());
  CHECK_THROWS_AS(recover_rank_r(U, 1, o), ConfigError);
}

TEST_CASE("recover_rank_r matches brute force on mixed universes") {
  const Tower& t = Tower::get(7);
  CertOptions o;
  auto U = universe(t, 4, {"t1", "t1+1", "t2", "(t1+1)/(t3+2)", "t3*t4"});
  for (int r : {2, 3}) {
    auto rec = recover_rank_r(U, r, o);
    CHECK(masks(rec) == brute_force_rank_r(U, r, 3));
    // Anti-chain.
    for (const auto& a : rec)
      for (const auto& b : rec)
        if (a.members != b.members) CHECK((a.members & b.members) != a.members);
  }
}

TEST_CASE("a dependent pair blocks certification") {
  const Tower& t = Tower::get(7);
  CertOptions o;
  o.budget = 3;
  // Algebraically independent, but the second class is 2 [t1] mod 3, so
  // the generated subgroup has dimension 1.
  auto U = universe(t, 3, {"t1", "t1^2*(t2+1)^3"});
  UniverseEngine eng(U, o);
  CHECK(eng.rank(0b11) == 2);
  CHECK_THROWS_AS(recover_rank_r(eng, 2), DimUnknown);
}

TEST_CASE("recover_rank_1 recovers coordinate points") {
  const Tower& t = Tower::get(7);
  CertOptions o;
  auto U = universe(t, 5, {"t1", "t2", "t3", "t4", "t1+2", "(t2+1)/(t3+1)"});
  UniverseEngine eng(U, o);
  auto r2 = recover_rank_r(eng, 2), r3 = recover_rank_r(eng, 3);
  auto pts = recover_rank_1(eng, r2, r3);
  std::set<Mask> got;
  for (const auto& p : pts) got.insert(p.flat.members);
  CHECK(got == std::set<Mask>{0b010001, 0b000010, 0b000100, 0b001000, 0b100000});
  for (const auto& p : pts) {
    const auto& w = p.witness;
    CHECK(w.b1 != w.b2);
    CHECK(!(w.c >> w.d & 1));
    CHECK((w.b1 | w.b2) == ((w.b1 | w.b2) & w.c));
    CHECK((w.b1p >> w.d & 1));
    CHECK((w.b2p >> w.d & 1));
    CHECK((w.e & w.b1p & w.b2p) == w.e);
    CHECK((w.b1 & w.b2) == p.flat.members);
    CHECK(eng.rank(w.c) == 3);
    CHECK(eng.rank(w.e) == 2);
    // Maximality with dim 1: a certificate against every other member.
    CHECK(p.flat.exclusions.size() == U.size() - popcount(p.flat.members));
    for (const auto& [z, c] : p.flat.exclusions) CHECK(c.replay());
  }
}

TEST_CASE("recover_rank_1 agrees with intersections of declared supports") {
  const Tower& t = Tower::get(7);
  CertOptions o;
  auto U = universe(t, 5, {"t1", "t2", "t3", "t4", "t5", "t1-1", "(t1+1)/(t2+2)", "t2*t3"});
  UniverseEngine eng(U, o);
  auto r2 = recover_rank_r(eng, 2), r3 = recover_rank_r(eng, 3);
  auto pts = recover_rank_1(eng, r2, r3);
  // B1 = members supported in {t1, t2}, B2 = members supported in {t1, t3}.
  Mask b1 = 0, b2 = 0;
  for (size_t i = 0; i < U.size(); ++i) {
    uint32_t s = U[i].generator.support();
    if ((s & 0b011) == s) b1 |= Mask{1} << i;
    if ((s & 0b101) == s) b2 |= Mask{1} << i;
  }
  bool found = false;
  for (const auto& p : pts) found |= p.flat.members == (b1 & b2);
  CHECK(found);
  CHECK((b1 & b2) == 0b100001);
}

TEST_CASE("recover_rank_1 without a witness D") {
  const Tower& t = Tower::get(7);
  CertOptions o;
  auto U = universe(t, 5, {"t1", "t2", "t3"});
  UniverseEngine eng(U, o);
  auto r2 = recover_rank_r(eng, 2), r3 = recover_rank_r(eng, 3);
  CHECK(recover_rank_1(eng, r2, r3).empty());
}

TEST_CASE("recipes agree with the generic matroid on supports") {
  const Tower& t = Tower::get(7);
  CertOptions o;
  auto U = universe(t, 5, {"t1", "t2", "t3", "t4", "t5", "t1+1", "(t1+1)/(t2+2)", "(t3+2)/(t4+1)", "t2+t3", "t1*t5+1"});
  std::vector<uint32_t> sup;
  for (const auto& u : U) sup.push_back(u.generator.support());
  kmr::testing::GenericMatroid M(sup, 5, 99);
  UniverseEngine eng(U, o);
  LatticeFragment L = build_lattice(eng);
  for (int r = 1; r <= 5; ++r) {
    std::set<Mask> got;
    for (size_t i : L.nodes_of_rank(r)) got.insert(L.nodes[i].members);
    CHECK(got == M.flats(r));
  }
  CHECK(L.verify() > 0);
  // Ranks respect the order.
  for (const auto& e : L.edges) CHECK(L.nodes[e.lower].rank < L.nodes[e.upper].rank);
  Json j = to_json(L);
  CHECK(j["nodes"].size() == L.nodes.size());
  CHECK(j["edges"].size() == L.edges.size());
  std::string dot = to_dot(L);
  CHECK(dot.find("digraph") == 0);
  CHECK(L.join(0b11) == L.join(0b111111 & 0b100011));
}

TEST_CASE("delta_set examples") {
  const Tower& t = Tower::get(7);
  RationalSubgroup A = rational_subgroup("k(t1)", rf(t, 3, "t1"));
  DeltaSet d = delta_set(A,
                         {coord_valuation(0, gi(t, 0)), coord_valuation(1, gi(t, 0)), coord_valuation_at_infinity(0),
                          coord_valuation(0, gi(t, 2), 3), coord_valuation(0, gi(t, 4), 2)},
                         3);
  REQUIRE(d.entries.size() == 3);
  CHECK(d.entries[0].point == pt(t, 0));
  CHECK(d.entries[1].point == P1Point{});
  CHECK(d.entries[2].point == pt(t, 4));
  CHECK(d.entries[2].multiplicity == 2);
  CHECK(d.skipped.size() == 2);
  // A_v: divisor coefficient 0 at the point.
  CHECK(d.in_entry_subgroup(0, rf(t, 1, "t1-1")));
  CHECK(!d.in_entry_subgroup(0, rf(t, 1, "t1")));
  CHECK(d.in_entry_subgroup(0, rf(t, 1, "t1^3*(t1-1)")));
  CHECK(d.in_entry_subgroup(1, rf(t, 1, "(t1-1)/(t1-2)")));
  CHECK(!d.in_entry_subgroup(1, rf(t, 1, "t1-1")));
}

TEST_CASE("delta_set on a non-coordinate generator") {
  const Tower& t = Tower::get(7);
  RationalSubgroup A = rational_subgroup("k(z)", rf(t, 3, "(t1+1)/(t2+2)"));
  DeltaSet d = delta_set(A, {coord_valuation(0, gi(t, -1)), coord_valuation(1, gi(t, -2)), coord_valuation(2, gi(t, 0)),
                             coord_valuation(0, gi(t, 3))},
                         3);
  REQUIRE(d.entries.size() == 2);
  CHECK(d.entries[0].point == pt(t, 0));
  CHECK(d.entries[1].point == P1Point{});
  // Index ell: the valuation of every member image matches the divisor.
  std::mt19937_64 rng(3);
  for (int k = 0; k < 30; ++k) {
    RatFunc f = kmr::testing::random_ratfunc(t, 1, 2, 3, 1, rng);
    if (f.is_constant()) continue;
    RatFunc img = A.image(f);
    Divisor df = div_ell(f, A, 3);
    for (const auto& e : d.entries) {
      uint32_t c = df.count(e.point) ? df.at(e.point) : 0;
      CHECK(mod_reduce(valuation_order(img, e.v), 3) == mod_reduce(c * e.multiplicity, 3));
    }
  }
}

TEST_CASE("very_general_search") {
  const Tower& t = Tower::get(7);
  RatFunc x = rf(t, 5, "t1"), y = rf(t, 5, "t2");
  std::vector<CoordValuation> ambient;
  for (int v = 0; v < 5; ++v)
    for (int a = 0; a < 3; ++a) ambient.push_back(coord_valuation(v, gi(t, a)));
  auto r = very_general_search(x, y, 20, ambient, 3);
  REQUIRE(r);
  CHECK(r->trial == 0);
  CHECK(r->z == rf(t, 5, "(t1+1)/(t2+1)"));
  CHECK(!very_general_search(x, y, 0, ambient, 3));
  ambient.push_back(coord_valuation(0, gi(t, -1), 3));
  auto r2 = very_general_search(x, y, 20, ambient, 3);
  REQUIRE(r2);
  CHECK(r2->trial == 1);
  REQUIRE(r2->rejected_by.size() == 1);
  CHECK(r2->rejected_by[0].exponent == 3);
  // Multiplicity 2 is prime to 3.
  ambient.back() = coord_valuation(0, gi(t, -1), 2);
  CHECK(very_general_search(x, y, 20, ambient, 3)->trial == 0);
}

TEST_CASE("epsilon rigidity on scalar maps") {
  const Tower& t = Tower::get(7);
  auto subs = universe(t, 2, {"t1", "t2", "(t1+1)/(t2+2)"});
  RigidityModel m = rigidity_model(subs, {{gi(t, 0), gi(t, -1), gi(t, 3)}, {gi(t, 0), gi(t, -2)}, {gi(t, 0), gi(t, 1)}}, 5);
  for (uint32_t eps = 1; eps < 5; ++eps) {
    RigidityResult r = epsilon_rigidity_check(ModMatrix::identity(m.dim, 5).scaled(eps), m);
    REQUIRE(r.epsilon);
    CHECK(*r.epsilon == eps);
    CHECK(r.components.size() == 1);
  }
}

TEST_CASE("epsilon rigidity rejects different scalars on unlinked fragments") {
  const Tower& t = Tower::get(7);
  auto subs = universe(t, 2, {"t1", "t2"});
  RigidityModel m = rigidity_model(subs, {{gi(t, 0), gi(t, 1)}, {gi(t, 0), gi(t, 2)}}, 5);
  REQUIRE(m.dim == 4);
  ModMatrix phi = ModMatrix::identity(4, 5);
  // Basis order: t1, t1 - 1, t2, t2 - 2.
  phi.at(0, 0) = phi.at(1, 1) = 2;
  RigidityResult r = epsilon_rigidity_check(phi, m);
  CHECK(!r.epsilon);
  REQUIRE(r.report);
  CHECK(r.report->kind == "missing_triangle");
  CHECK(r.report->fragments == std::vector<std::string>{"t1", "t2"});
  CHECK(r.components.size() == 2);
  // Adding the triangle C = k(t1 / t2) makes Phi non-preserving.
  auto subs3 = universe(t, 2, {"t1", "t2", "t1/t2"});
  RigidityModel m3 = rigidity_model(subs3, {{gi(t, 0), gi(t, 1)}, {gi(t, 0), gi(t, 2)}, {gi(t, 0)}}, 5);
  CHECK_THROWS_AS(epsilon_rigidity_check(phi, m3), NotPreserving);
  RigidityResult r3 = epsilon_rigidity_check(ModMatrix::identity(4, 5).scaled(3), m3);
  CHECK(r3.components.size() == 1);
  CHECK(*r3.epsilon == 3);
}

TEST_CASE("epsilon rigidity rejects maps moving a point subgroup") {
  const Tower& t = Tower::get(7);
  auto subs = universe(t, 2, {"t1"});
  RigidityModel m = rigidity_model(subs, {{gi(t, 0), gi(t, 1)}}, 3);
  ModMatrix swap(2, 2, 3);
  swap.at(0, 1) = swap.at(1, 0) = 1;
  CHECK_THROWS_AS(epsilon_rigidity_check(swap, m), NotPreserving);
  // A map that is scalar on the fragment but not outside it.
  auto subs2 = universe(t, 2, {"t1", "t2"});
  RigidityModel m2 = rigidity_model(subs2, {{gi(t, 0), gi(t, 1)}, {gi(t, 0)}}, 3);
  RigidityModel m1 = m2;
  m1.fragments.pop_back();
  ModMatrix phi = ModMatrix::identity(3, 3);
  phi.at(2, 2) = 2;
  RigidityResult r = epsilon_rigidity_check(phi, m1);
  REQUIRE(r.report);
  CHECK(r.report->kind == "not_scalar");
  CHECK(!r.spans_ambient);
  CHECK(r.report->witness == Vec{0, 0, 1});
}

TEST_CASE("rigidity model JSON round trip") {
  const Tower& t = Tower::get(7);
  auto subs = universe(t, 2, {"t1", "(t1+1)/(t2+2)"});
  RigidityModel m = rigidity_model(subs, {{gi(t, 0), gi(t, 1)}, {gi(t, 0), gi(t, 2)}}, 3);
  RigidityModel back = rigidity_model_from_json(to_json(m));
  CHECK(to_json(back) == to_json(m));
  CHECK(m.dim == 5);
}
