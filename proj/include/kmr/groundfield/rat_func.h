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

#ifndef KMR_GROUNDFIELD_RAT_FUNC_H_
#define KMR_GROUNDFIELD_RAT_FUNC_H_

#include <compare>
#include <string>
#include <vector>

#include "kmr/groundfield/sparse_poly.h"

namespace kmr {

// Element of K = k(t1..td) as num/den. The stored form is canonical: the
// monomial gcd of num and den is divided out, exact polynomial quotients
// are carried out, and the leading coefficient of den is 1. Two RatFuncs
// with equal canonical forms are equal; equality in general is decided by
// cross multiplication.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(SparsePoly num, SparsePoly den);
  explicit RatFunc(SparsePoly num);

  static RatFunc constant(const Tower& t, int num_vars, const GroundElem& c);
  static RatFunc constant(const Tower& t, int num_vars, int64_t c);
  static RatFunc variable(const Tower& t, int num_vars, int var);

  const SparsePoly& num() const { return num_; }
  const SparsePoly& den() const { return den_; }
  const Tower& tower() const { return num_.tower(); }
  int num_vars() const { return num_.num_vars(); }
  bool valid() const { return num_vars() > 0 || !den_.is_zero(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;
  GroundElem constant_value() const;
  uint32_t support() const { return num_.support() | den_.support(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc pow(int64_t k) const;
  RatFunc scaled(const GroundElem& c) const;

  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  // Structural order on canonical forms.
  std::strong_ordering compare(const RatFunc& o) const;
  bool structurally_equal(const RatFunc& o) const;

  // Representative of the class modulo k^x: numerator made monic as well.
  RatFunc unit_normalized() const;

  RatFunc substitute(int var, const GroundElem& a) const;
  RatFunc permuted(const std::vector<int>& perm) const;
  // Substitutes variable i by images[i].
  RatFunc compose(const std::vector<RatFunc>& images) const;
  // (df/dt_var) as a rational function.
  RatFunc derivative(int var) const;
  GroundElem evaluate(const std::vector<GroundElem>& point) const;
  // True if every partial derivative vanishes (f is a p-th power).
  bool all_derivatives_vanish() const;
  // f^(1/p) when f is a p-th power; requires all_derivatives_vanish().
  RatFunc pth_root() const;

  size_t hash() const;
  std::string to_string() const;

 private:
  void canonicalize();

  SparsePoly num_;
  SparsePoly den_;
};

}  // namespace kmr

#endif  // KMR_GROUNDFIELD_RAT_FUNC_H_
