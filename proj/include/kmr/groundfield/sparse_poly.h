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

#ifndef KMR_GROUNDFIELD_SPARSE_POLY_H_
#define KMR_GROUNDFIELD_SPARSE_POLY_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmr/groundfield/ground_elem.h"

namespace kmr {

inline constexpr int kMaxVars = 8;
using Monomial = std::array<uint16_t, kMaxVars>;

struct Term {
  Monomial exp;
  GroundElem coef;
};

// Sparse polynomial in num_vars variables t1..td over the algebraic closure
// of F_p. Terms are sorted by descending lexicographic exponent order
// (t1 > t2 > ...), with no zero coefficients.
class SparsePoly {
 public:
  SparsePoly() = default;
  SparsePoly(const Tower& t, int num_vars);

  static SparsePoly constant(const Tower& t, int num_vars, const GroundElem& c);
  static SparsePoly constant(const Tower& t, int num_vars, int64_t c);
  static SparsePoly variable(const Tower& t, int num_vars, int var);
  static SparsePoly monomial(const Tower& t, int num_vars, const Monomial& e, const GroundElem& c);
  static SparsePoly from_terms(const Tower& t, int num_vars, std::vector<Term> terms);

  const Tower& tower() const { return *tower_; }
  int num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The constant term value if the polynomial is constant.
  GroundElem constant_value() const;
  const Term& leading() const { return terms_.front(); }
  GroundElem leading_coef() const { return terms_.front().coef; }
  int total_degree() const;
  int degree_in(int var) const;      // -1 for zero
  int min_degree_in(int var) const;  // -1 for zero
  // Bitmask of variables that occur.
  uint32_t support() const;
  // Level of the chain field holding every coefficient.
  uint32_t coef_level() const;

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(const GroundElem& c) const;
  SparsePoly pow(unsigned k) const;
  bool operator==(const SparsePoly& o) const;
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }
  std::strong_ordering compare(const SparsePoly& o) const;

  // Coefficient of var^k, as a polynomial with var's exponent zeroed.
  SparsePoly coeff_in(int var, int k) const;
  // Groups terms by their exponents outside var; each group is returned as a
  // polynomial in var only.
  std::vector<SparsePoly> coefficient_polys(int var) const;
  // Substitutes var -> var + a.
  SparsePoly taylor_shift(int var, const GroundElem& a) const;
  // Substitutes var -> a.
  SparsePoly substitute(int var, const GroundElem& a) const;
  // var^deg * f(1/var), deg >= degree_in(var).
  SparsePoly reverse_in(int var, int deg) const;
  SparsePoly derivative(int var) const;
  GroundElem evaluate(const std::vector<GroundElem>& point) const;
  // Variable i of the result is variable perm[i] of this polynomial.
  SparsePoly permuted(const std::vector<int>& perm) const;
  // Substitutes each var by the given polynomial (all in target_vars vars).
  SparsePoly compose(const std::vector<SparsePoly>& images) const;
  // Applies x -> x^(p^k) to all coefficients (k may be negative).
  SparsePoly frobenius_coeffs(int k) const;
  // Exponent-wise minimum over all terms.
  Monomial monomial_gcd() const;
  SparsePoly divide_monomial(const Monomial& m) const;
  SparsePoly multiply_monomial(const Monomial& m) const;
  // Exact quotient if o divides this polynomial.
  std::optional<SparsePoly> divide_exact(const SparsePoly& o) const;
  SparsePoly monic() const;
  // If all exponents are divisible by p, the p-th root.
  std::optional<SparsePoly> pth_root() const;

  size_t hash() const;
  std::string to_string() const;

 private:
  void normalize();

  const Tower* tower_ = nullptr;
  int num_vars_ = 0;
  std::vector<Term> terms_;
};

Monomial monomial_zero();
std::string var_name(int i);

}  // namespace kmr

#endif  // KMR_GROUNDFIELD_SPARSE_POLY_H_
