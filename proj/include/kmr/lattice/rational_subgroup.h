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

#ifndef KMR_LATTICE_RATIONAL_SUBGROUP_H_
#define KMR_LATTICE_RATIONAL_SUBGROUP_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kmr/groundfield/rat_func.h"

namespace kmr {

// A point of P^1 over the algebraic closure; nullopt is infinity. Finite
// points come first in the order.
struct P1Point {
  std::optional<GroundElem> a;

  bool is_infinity() const { return !a.has_value(); }
  bool operator==(const P1Point& o) const;
  bool operator<(const P1Point& o) const;
  std::string to_string() const;
};

// Divisor with coefficients in Z/ell; zero coefficients are not stored.
using Divisor = std::map<P1Point, uint32_t>;

// Omega_K(k(x)) for a declared general element x of K. Members are given as
// one-variable rational functions f(s) and stand for f(x) in K.
struct RationalSubgroup {
  std::string label;
  RatFunc generator;

  int num_vars() const { return generator.num_vars(); }
  const Tower& tower() const { return generator.tower(); }
  // f(x) as an element of K.
  RatFunc image(const RatFunc& member) const;
  // The member s - a with divisor [a] - [inf]; 1/s for infinity.
  RatFunc point_class(const P1Point& pt) const;
  // Basis classes (s - a) for the given finite points, keyed by point. Their
  // divisors [a] - [inf] span the sum-zero divisors supported on the points
  // and infinity.
  std::map<P1Point, RatFunc> divisor_basis(const std::vector<P1Point>& points) const;
  // Index of the coordinate variable if the generator is exactly t_i.
  std::optional<int> coordinate() const;
};

RationalSubgroup rational_subgroup(const std::string& label, const RatFunc& generator);

// Reduced divisor of a member. f may be a one-variable function (a member
// in the subgroup's own variable) or, when the generator is a coordinate
// t_i, an element of K involving only t_i. NotMember otherwise.
Divisor div_ell(const RatFunc& f, const RationalSubgroup& A, uint32_t ell);

// Sum of the coefficients mod ell.
uint32_t divisor_degree(const Divisor& d, uint32_t ell);

// Rewrites a function of the single variable t_var as a one-variable
// function.
RatFunc to_univariate(const RatFunc& f, int var);

}  // namespace kmr

#endif  // KMR_LATTICE_RATIONAL_SUBGROUP_H_
