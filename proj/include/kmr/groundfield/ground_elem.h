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

#ifndef KMR_GROUNDFIELD_GROUND_ELEM_H_
#define KMR_GROUNDFIELD_GROUND_ELEM_H_

#include <compare>
#include <cstdint>
#include <random>
#include <string>

#include "kmr/groundfield/tower.h"

namespace kmr {

// An element of the algebraic closure of F_p, stored at a level m of a
// Tower. Results of arithmetic are always stored at the smallest chain level
// that contains them; tower_embed can produce elements at levels outside the
// chain, which are re-expressed on the chain before any arithmetic.
class GroundElem {
 public:
  GroundElem() = default;
  GroundElem(const Tower& tower, uint32_t level, Raw coeffs);

  static GroundElem zero(const Tower& t);
  static GroundElem one(const Tower& t);
  static GroundElem from_int(const Tower& t, int64_t c);
  // Uniform random element of F_{p^m} (m a chain level).
  static GroundElem random(const Tower& t, uint32_t level, std::mt19937_64& rng);
  // The class of the absolute generator of chain level m.
  static GroundElem generator(const Tower& t, uint32_t level);

  bool valid() const { return tower_ != nullptr; }
  const Tower& tower() const { return *tower_; }
  uint32_t p() const { return tower_->p(); }
  uint32_t level() const { return level_; }
  const Raw& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  // Value in F_p if the element lies there.
  bool is_prime_field() const { return canonical().level_ == 1; }
  uint32_t prime_field_value() const;

  // Same element at the smallest chain level containing it.
  GroundElem canonical() const;
  // Coordinates at chain level m (m a chain level divisible by this level).
  Raw at_chain_level(uint32_t m) const;

  GroundElem operator+(const GroundElem& o) const;
  GroundElem operator-(const GroundElem& o) const;
  GroundElem operator-() const;
  GroundElem operator*(const GroundElem& o) const;
  GroundElem operator/(const GroundElem& o) const;
  GroundElem inverse() const;
  GroundElem pow(const BigInt& e) const;
  GroundElem pow_int(int64_t e) const;
  GroundElem& operator+=(const GroundElem& o) { return *this = *this + o; }
  GroundElem& operator-=(const GroundElem& o) { return *this = *this - o; }
  GroundElem& operator*=(const GroundElem& o) { return *this = *this * o; }

  bool operator==(const GroundElem& o) const;
  bool operator!=(const GroundElem& o) const { return !(*this == o); }
  // Canonical total order: by chain level, then coefficients.
  std::strong_ordering operator<=>(const GroundElem& o) const;

  size_t hash() const;
  std::string to_string() const;

 private:
  static GroundElem make_canonical(const Tower& t, Raw chain_coeffs);

  const Tower* tower_ = nullptr;
  uint32_t level_ = 1;
  Raw c_;
};

// Image of x under the fixed embedding F_{p^m} -> F_{p^target}.
GroundElem tower_embed(const GroundElem& x, uint32_t target_level);
// Inverse of tower_embed on its image; LevelError if x is not in the level.
GroundElem tower_project(const GroundElem& x, uint32_t level);

// y with y^ell = x, at the smallest chain level where such a root exists.
GroundElem ell_th_root(const GroundElem& x, uint32_t ell);

// Multiplicative order; TooLarge if p^m - 1 cannot be factored by trial
// division within 64 bits.
uint64_t multiplicative_order(const GroundElem& x);

}  // namespace kmr

#endif  // KMR_GROUNDFIELD_GROUND_ELEM_H_
