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

#ifndef KMR_KMILNOR_DIMENSION_H_
#define KMR_KMILNOR_DIMENSION_H_

#include <optional>
#include <string>
#include <vector>

#include "kmr/kmilnor/certificate.h"

namespace kmr {

// Rational: symbols may use any element of k(gens), in particular shifts
// x - a (dimension of Omega_K(k(gens))). Generated: only the generators
// themselves (dimension of the subgroup they generate).
enum class DimMode { Rational, Generated };

struct DimBounds {
  int lower = 0;  // certified
  int upper = 0;  // from trdeg bounds (degree r vanishes above trdeg)
  std::optional<Certificate> witness;
  std::string upper_reason;
  bool exact() const { return lower == upper; }
};

// Rank over the algebraic closure of a list of vectors.
int ground_rank(std::vector<std::vector<GroundElem>> rows);

// Gradient of f at a point, up to the nonzero factor den(point)^2.
// ZeroError if the denominator vanishes at the point.
std::vector<GroundElem> scaled_gradient(const RatFunc& f, const std::vector<GroundElem>& point);

// Generic rank of the Jacobian of gens (max over a few fixed random points
// of F_{p^12}); equals trdeg k(gens) when the generators are separable.
int jacobian_rank(const std::vector<RatFunc>& gens);

// Replaces f by f^(1/p) while all its partial derivatives vanish. The class
// of f in K^x/ell only changes by the unit p.
RatFunc separable_root(const RatFunc& f);

DimBounds milnor_dim_bounds(const std::vector<RatFunc>& gens, int trdeg, const CertOptions& opt,
                            DimMode mode = DimMode::Rational);

}  // namespace kmr

#endif  // KMR_KMILNOR_DIMENSION_H_
