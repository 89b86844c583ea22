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

#ifndef KMR_ABC_COHOMOLOGY_H_
#define KMR_ABC_COHOMOLOGY_H_

#include <cstdint>
#include <vector>

#include "kmr/groundfield/json_io.h"
#include "kmr/modlinalg.h"

namespace kmr {

// Elements of (Z/ell)^n are indexed by a = sum a_i ell^i. A 2-cochain is a
// table c[a * N + b] with N = ell^n.
struct H2Result {
  size_t n = 0;
  uint32_t ell = 0;
  size_t group_order = 0;
  size_t cocycle_dim = 0;
  size_t coboundary_dim = 0;
  size_t dim = 0;
  // Cocycles whose classes form a basis of H^2.
  std::vector<Vec> basis;
};

// Solves the 2-cocycle system for trivial coefficients Z/ell and divides
// by the coboundaries of all 1-cochains. A cocycle is determined by the
// values c(a, e_i) and c(0, 0); the remaining values are propagated along a
// breadth-first tree of the group and the conditions dc(a, b, e_i) = 0 for
// all a, b, i are imposed, which forces dc = 0 everywhere. TooLarge when
// ell^n > 243.
H2Result h2_brute_force(size_t n, uint32_t ell);

// Cup products x u y, Bockstein classes and the relation generators
// (x (x) x) + C(ell,2) x, all as cocycle tables.
Vec cup_cocycle(const Vec& x, const Vec& y, uint32_t ell);
Vec bockstein_cocycle(const Vec& x, uint32_t ell);

// The map (H1 (x) H1) + H1 -> H2, (x (x) y) + z -> x u y + beta z, evaluated
// on cocycles and reduced modulo coboundaries.
struct H2Presentation {
  size_t n = 0;
  uint32_t ell = 0;
  size_t h2_dim = 0;
  size_t image_dim = 0;      // rank of the presentation map
  size_t dec_dim = 0;        // rank on the cup part
  size_t bockstein_dim = 0;  // rank on the Bockstein part
  size_t bockstein_in_dec = 0;
  // Kernel of the presentation map in coordinates (x_i (x) x_j at index
  // i * n + j, then z_i at n^2 + i).
  Subspace kernel;
  // Span of (x (x) x) + C(ell,2) x over all x in H1.
  Subspace relation_span;
  bool surjective() const { return image_dim == h2_dim; }
  bool kernel_matches() const { return kernel == relation_span; }
};

H2Presentation h2_presentation(size_t n, uint32_t ell);

Json to_json(const H2Result& r);
Json to_json(const H2Presentation& p);

}  // namespace kmr

#endif  // KMR_ABC_COHOMOLOGY_H_
