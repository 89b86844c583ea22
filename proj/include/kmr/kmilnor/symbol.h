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

#ifndef KMR_KMILNOR_SYMBOL_H_
#define KMR_KMILNOR_SYMBOL_H_

#include <cstdint>
#include <string>
#include <vector>

#include "kmr/groundfield/rat_func.h"
#include "kmr/groundfield/valuation.h"

namespace kmr {

enum class Truth { False, True, Unknown };
std::string to_string(Truth t);

// {x1,...,xn} in k^M_n(K). Entries are representatives of classes in
// K^x / ell.
struct Symbol {
  std::vector<RatFunc> entries;
  size_t degree() const { return entries.size(); }
  std::string to_string() const;
};

struct SymbolTerm {
  uint32_t coef = 0;  // in [1, ell)
  std::vector<RatFunc> entries;
};

// Z/ell-linear combination of symbols of a fixed degree. Terms are kept in a
// normal form: entries are made monic (classes are taken modulo k^x), terms
// containing a constant or a repeated entry are dropped, entries are sorted
// (each transposition flips the sign) and equal terms are merged. A degree 0
// FormalSymbol is an element of Z/ell.
class FormalSymbol {
 public:
  FormalSymbol() = default;
  FormalSymbol(uint32_t ell, size_t degree) : ell_(ell), degree_(degree) {}
  static FormalSymbol from_symbol(const Symbol& s, uint32_t ell);
  static FormalSymbol scalar(uint32_t ell, int64_t value);

  uint32_t ell() const { return ell_; }
  size_t degree() const { return degree_; }
  const std::vector<SymbolTerm>& terms() const { return terms_; }
  bool formally_zero() const { return terms_.empty(); }
  // Value in Z/ell of a degree 0 symbol.
  uint32_t scalar_value() const;

  void add_term(int64_t coef, std::vector<RatFunc> entries);
  FormalSymbol operator+(const FormalSymbol& o) const;
  FormalSymbol operator-(const FormalSymbol& o) const;
  FormalSymbol scaled(int64_t c) const;

  // Exact in degree 0, and in degree 1 when all entries are functions of one
  // common variable (divisor comparison). Otherwise True only when the
  // normal form is empty or the degree 1 product is constant.
  Truth is_zero() const;

  std::string to_string() const;

 private:
  uint32_t ell_ = 0;
  size_t degree_ = 0;
  std::vector<SymbolTerm> terms_;
};

// Residue map of v applied to s. pi must have v-order 1 (before any cover
// exponent); the result does not depend on the choice of pi. In degree 1
// the result is v(x) mod ell.
FormalSymbol tame_step(const FormalSymbol& s, const CoordValuation& v, const RatFunc& pi);
FormalSymbol tame_step(const Symbol& s, uint32_t ell, const CoordValuation& v, const RatFunc& pi);

}  // namespace kmr

#endif  // KMR_KMILNOR_SYMBOL_H_
