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

#include "kmr/lattice/rational_subgroup.h"

#include "kmr/errors.h"
#include "kmr/groundfield/roots.h"
#include "kmr/modlinalg.h"

namespace kmr {

bool P1Point::operator==(const P1Point& o) const {
  if (a.has_value() != o.a.has_value()) return false;
  return !a || *a == *o.a;
}

bool P1Point::operator<(const P1Point& o) const {
  if (!a) return false;
  if (!o.a) return true;
  return *a < *o.a;
}

std::string P1Point::to_string() const { return a ? a->to_string() : "inf"; }

RatFunc RationalSubgroup::image(const RatFunc& member) const {
  if (member.num_vars() != 1) throw NotMember("members are functions of one variable");
  return member.compose({generator});
}

RatFunc RationalSubgroup::point_class(const P1Point& pt) const {
  const Tower& t = tower();
  RatFunc s = RatFunc::variable(t, 1, 0);
  if (pt.is_infinity()) return s.inverse();
  return s - RatFunc::constant(t, 1, *pt.a);
}

std::map<P1Point, RatFunc> RationalSubgroup::divisor_basis(const std::vector<P1Point>& points) const {
  std::map<P1Point, RatFunc> out;
  for (const auto& p : points)
    if (!p.is_infinity()) out.emplace(p, point_class(p));
  return out;
}

std::optional<int> RationalSubgroup::coordinate() const {
  const SparsePoly& n = generator.num();
  if (!generator.den().is_constant() || n.size() != 1 || !n.leading_coef().is_one()) return std::nullopt;
  if (n.total_degree() != 1) return std::nullopt;
  for (int i = 0; i < n.num_vars(); ++i)
    if (n.leading().exp[i] == 1) return i;
  return std::nullopt;
}

RationalSubgroup rational_subgroup(const std::string& label, const RatFunc& generator) {
  if (generator.is_zero() || generator.is_constant()) throw ConfigError("generator of " + label + " must be transcendental");
  return RationalSubgroup{label, generator};
}

RatFunc to_univariate(const RatFunc& f, int var) {
  if (f.support() & ~(1u << var)) throw NotMember("function involves other variables");
  auto conv = [&](const SparsePoly& g) {
    std::vector<Term> terms;
    for (const auto& term : g.terms()) {
      Monomial e = monomial_zero();
      e[0] = term.exp[var];
      terms.push_back({e, term.coef});
    }
    return SparsePoly::from_terms(g.tower(), 1, std::move(terms));
  };
  return RatFunc(conv(f.num()), conv(f.den()));
}

namespace {

void add_roots(const SparsePoly& f, int64_t sign, std::map<P1Point, int64_t>& acc) {
  if (f.is_constant()) return;
  for (const auto& r : univariate_roots(f, 0)) acc[P1Point{r.root}] += sign * r.mult;
}

}  // namespace

Divisor div_ell(const RatFunc& f, const RationalSubgroup& A, uint32_t ell) {
  if (f.is_zero()) throw ZeroInputError("divisor of zero");
  RatFunc g = f;
  if (f.num_vars() != 1) {
    auto c = A.coordinate();
    if (!c || f.num_vars() != A.num_vars()) throw NotMember(f.to_string() + " is not presented as a member of " + A.label);
    g = to_univariate(f, *c);
  }
  std::map<P1Point, int64_t> acc;
  add_roots(g.num(), 1, acc);
  add_roots(g.den(), -1, acc);
  acc[P1Point{}] += g.den().degree_in(0) - g.num().degree_in(0);
  Divisor d;
  for (const auto& [pt, m] : acc) {
    uint32_t c = mod_reduce(m, ell);
    if (c) d[pt] = c;
  }
  return d;
}

uint32_t divisor_degree(const Divisor& d, uint32_t ell) {
  uint64_t s = 0;
  for (const auto& [pt, c] : d) s += c;
  return static_cast<uint32_t>(s % ell);
}

}  // namespace kmr
