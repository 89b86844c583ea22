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

#ifndef KMR_GROUNDFIELD_ROOTS_H_
#define KMR_GROUNDFIELD_ROOTS_H_

#include <cstdint>
#include <vector>

#include "kmr/groundfield/sparse_poly.h"

namespace kmr {

struct RootMult {
  GroundElem root;
  uint32_t mult = 0;
};

// All roots in the algebraic closure with multiplicities, sorted in the
// canonical GroundElem order. f must only involve the variable var.
std::vector<RootMult> univariate_roots(const SparsePoly& f, int var);
// Same, for a polynomial in at most one variable (found automatically).
std::vector<RootMult> univariate_roots(const SparsePoly& f);

// Monic gcd of polynomials in the single variable var.
SparsePoly univariate_gcd(const std::vector<SparsePoly>& polys, int var);

}  // namespace kmr

#endif  // KMR_GROUNDFIELD_ROOTS_H_
