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

#ifndef KMR_GROUNDFIELD_FIELD_CTX_H_
#define KMR_GROUNDFIELD_FIELD_CTX_H_

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kmr {

using BigInt = boost::multiprecision::cpp_int;
using Raw = std::vector<uint32_t>;

BigInt big_pow(uint64_t base, uint64_t exp);

// Arithmetic in F_p[x]/(f) for a monic irreducible f of degree m, on
// coefficient vectors of length m ("absolute" coordinates).
class FieldCtx {
 public:
  FieldCtx() = default;
  FieldCtx(uint32_t p, Raw modulus);

  uint32_t p() const { return p_; }
  uint32_t degree() const { return m_; }
  const Raw& modulus() const { return mod_; }
  BigInt order() const { return big_pow(p_, m_); }

  Raw zero() const { return Raw(m_, 0); }
  Raw one() const;
  Raw from_int(int64_t c) const;
  Raw generator() const;  // the class of x
  bool is_zero(const Raw& a) const;
  bool is_one(const Raw& a) const;

  Raw add(const Raw& a, const Raw& b) const;
  Raw sub(const Raw& a, const Raw& b) const;
  Raw neg(const Raw& a) const;
  Raw mul(const Raw& a, const Raw& b) const;
  Raw scale(const Raw& a, uint32_t c) const;
  Raw inv(const Raw& a) const;
  Raw pow(const Raw& a, const BigInt& e) const;
  Raw random(std::mt19937_64& rng) const;

 private:
  uint32_t p_ = 2;
  uint32_t m_ = 1;
  Raw mod_;  // length m+1, monic
};

// Dense univariate polynomials over a FieldCtx; coefficient i multiplies x^i.
// Polynomials are kept trimmed (no trailing zero coefficient); the zero
// polynomial is the empty vector.
using UPoly = std::vector<Raw>;

namespace upoly {

void trim(const FieldCtx& f, UPoly& a);
int degree(const UPoly& a);
UPoly x_poly(const FieldCtx& f);
UPoly constant(const FieldCtx& f, const Raw& c);
UPoly add(const FieldCtx& f, const UPoly& a, const UPoly& b);
UPoly sub(const FieldCtx& f, const UPoly& a, const UPoly& b);
UPoly mul(const FieldCtx& f, const UPoly& a, const UPoly& b);
UPoly scale(const FieldCtx& f, const UPoly& a, const Raw& c);
// Returns (quotient, remainder); b must be nonzero.
std::pair<UPoly, UPoly> divmod(const FieldCtx& f, const UPoly& a, const UPoly& b);
UPoly mod(const FieldCtx& f, const UPoly& a, const UPoly& b);
UPoly mulmod(const FieldCtx& f, const UPoly& a, const UPoly& b, const UPoly& m);
UPoly powmod(const FieldCtx& f, const UPoly& a, const BigInt& e, const UPoly& m);
// a(b(x)) mod m.
UPoly compose_mod(const FieldCtx& f, const UPoly& a, const UPoly& b, const UPoly& m);
UPoly monic(const FieldCtx& f, const UPoly& a);
UPoly gcd(const FieldCtx& f, UPoly a, UPoly b);
Raw eval(const FieldCtx& f, const UPoly& a, const Raw& x);

// Distinct roots of a polynomial that splits into distinct linear factors.
std::vector<Raw> split_roots(const FieldCtx& f, const UPoly& g, std::mt19937_64& rng);

// Degrees d for which the polynomial has an irreducible factor of degree d
// over the field of f.
std::vector<int> factor_degrees(const FieldCtx& f, const UPoly& g);

bool is_irreducible(const FieldCtx& f, const UPoly& g);

}  // namespace upoly
}  // namespace kmr

#endif  // KMR_GROUNDFIELD_FIELD_CTX_H_
