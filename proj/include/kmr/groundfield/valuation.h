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

#ifndef KMR_GROUNDFIELD_VALUATION_H_
#define KMR_GROUNDFIELD_VALUATION_H_

#include <cstdint>
#include <optional>
#include <string>

#include "kmr/groundfield/rat_func.h"

namespace kmr {

// Divisorial valuation of K along t_var = center, or the pole divisor of
// t_var when center is empty. exponent e > 1 describes the valuation on the
// Kummer cover t_var - a = s^e (resp. 1/t_var = s^e): orders are multiplied
// by e while residues are unchanged.
struct CoordValuation {
  int var = 0;
  std::optional<GroundElem> center;
  uint32_t exponent = 1;

  bool at_infinity() const { return !center.has_value(); }
  std::string to_string() const;
  bool operator==(const CoordValuation& o) const;
};

CoordValuation coord_valuation(int var, const GroundElem& center, uint32_t exponent = 1);
CoordValuation coord_valuation_at_infinity(int var, uint32_t exponent = 1);

struct OrderResidue {
  int64_t order = 0;
  RatFunc residue;  // a function of the variables other than v.var
};

// v(f) and the residue of f / pi^v(f), pi = t - a (resp. 1/t).
OrderResidue order_and_residue(const RatFunc& f, const CoordValuation& v);
int64_t valuation_order(const RatFunc& f, const CoordValuation& v);

// t_var - a, or 1/t_var.
RatFunc canonical_uniformizer(const CoordValuation& v, const Tower& t, int num_vars);

}  // namespace kmr

#endif  // KMR_GROUNDFIELD_VALUATION_H_
