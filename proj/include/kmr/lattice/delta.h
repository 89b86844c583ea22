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

#ifndef KMR_LATTICE_DELTA_H_
#define KMR_LATTICE_DELTA_H_

#include <optional>
#include <vector>

#include "kmr/groundfield/valuation.h"
#include "kmr/lattice/rational_subgroup.h"

namespace kmr {

// v restricts to the valuation w of k(x) at `point` with v(x - point) =
// multiplicity * ord_w(x - point); A_v is the kernel of the coefficient of
// div_ell at that point.
struct DeltaEntry {
  CoordValuation v;
  P1Point point;
  int64_t multiplicity = 1;
};

struct DeltaSet {
  RationalSubgroup base;
  uint32_t ell = 0;
  std::vector<DeltaEntry> entries;
  std::vector<CoordValuation> skipped;

  // f (a member in the subgroup variable) lies in A_v for entry i.
  bool in_entry_subgroup(size_t i, const RatFunc& member) const;
};

// Restriction of v to k(x), or nullopt when v is trivial on k(x) (x is a
// v-unit with transcendental residue).
std::optional<DeltaEntry> restrict_to_rational(const RatFunc& x, const CoordValuation& v);

// Skips v when A is contained in U_v: v trivial on k(x), or ell dividing
// the ramification of w in v.
DeltaSet delta_set(const RationalSubgroup& A, const std::vector<CoordValuation>& ambient, uint32_t ell);

struct VeryGeneralResult {
  GroundElem a, b;
  RatFunc z;  // (x + a) / (y + b)
  size_t trial = 0;
  std::vector<CoordValuation> rejected_by;  // one entry per rejected trial
};

// Scans (b, a) with b in the outer loop; the first pairs run through small
// integers, later ones are random in F_{p^m}, m in {1, 2, 6}. A candidate
// passes when z is separable and transcendental and every ambient
// valuation that is nontrivial on k(z) restricts with multiplicity prime to
// ell. nullopt after budget trials.
std::optional<VeryGeneralResult> very_general_search(const RatFunc& x, const RatFunc& y, size_t budget,
                                                     const std::vector<CoordValuation>& ambient, uint32_t ell,
                                                     uint64_t seed = 0);

}  // namespace kmr

#endif  // KMR_LATTICE_DELTA_H_
