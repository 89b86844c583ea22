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

#include "kmr/groundfield/valuation.h"

#include "kmr/errors.h"

namespace kmr {

std::string CoordValuation::to_string() const {
  std::string s = var_name(var) + "=" + (center ? center->to_string() : std::string("inf"));
  if (exponent != 1) s += " e=" + std::to_string(exponent);
  return s;
}

bool CoordValuation::operator==(const CoordValuation& o) const {
  return var == o.var && exponent == o.exponent && center.has_value() == o.center.has_value() &&
         (!center || *center == *o.center);
}

CoordValuation coord_valuation(int var, const GroundElem& center, uint32_t exponent) {
  return CoordValuation{var, center.canonical(), exponent};
}

CoordValuation coord_valuation_at_infinity(int var, uint32_t exponent) {
  return CoordValuation{var, std::nullopt, exponent};
}

namespace {

std::pair<int, SparsePoly> lowest_part(const SparsePoly& f, const CoordValuation& v) {
  if (v.at_infinity()) {
    int d = f.degree_in(v.var);
    return {-d, f.coeff_in(v.var, d)};
  }
  SparsePoly s = f.taylor_shift(v.var, *v.center);
  int n = s.min_degree_in(v.var);
  return {n, s.coeff_in(v.var, n)};
}

}  // namespace

OrderResidue order_and_residue(const RatFunc& f, const CoordValuation& v) {
  if (f.is_zero()) throw ZeroInputError("valuation of zero");
  auto [nn, ln] = lowest_part(f.num(), v);
  auto [nd, ld] = lowest_part(f.den(), v);
  return OrderResidue{static_cast<int64_t>(nn - nd) * v.exponent, RatFunc(ln, ld)};
}

int64_t valuation_order(const RatFunc& f, const CoordValuation& v) {
  if (f.is_zero()) throw ZeroInputError("valuation of zero");
  auto order_of = [&](const SparsePoly& g) -> int64_t {
    if (v.at_infinity()) return -g.degree_in(v.var);
    return g.taylor_shift(v.var, *v.center).min_degree_in(v.var);
  };
  return (order_of(f.num()) - order_of(f.den())) * v.exponent;
}

RatFunc canonical_uniformizer(const CoordValuation& v, const Tower& t, int num_vars) {
  RatFunc x = RatFunc::variable(t, num_vars, v.var);
  if (v.at_infinity()) return x.inverse();
  return x - RatFunc::constant(t, num_vars, *v.center);
}

}  // namespace kmr
