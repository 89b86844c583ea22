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

#ifndef KMR_GEOMETRY_ISOMORPHISM_H_
#define KMR_GEOMETRY_ISOMORPHISM_H_

#include <optional>
#include <string>
#include <vector>

#include "kmr/geometry/closure.h"

namespace kmr {

// Bijection of points, f[i] = image of point i.
using PointMap = std::vector<size_t>;

PointSet map_set(const PointMap& f, PointSet s);
PointMap compose(const PointMap& g, const PointMap& f);  // g after f
PointMap inverse(const PointMap& f);

struct IsoCheck {
  bool ok = true;
  bool exhaustive = false;
  PointSet witness = 0;  // A with f(cl A) != cl(f A)
};

// Checks f(cl(A)) = cl(f(A)) on all subsets when the geometry has at most
// 14 points, else on all subsets of size at most max_size.
IsoCheck check_isomorphism(const ClosureGeometry& g1, const ClosureGeometry& g2, const PointMap& f, int max_size = 6);

// Node map of graded lattice views (f[i] = image of node i). NotIsomorphism
// with the violated pair unless f is a rank- and order-preserving
// bijection. Returns the induced map on points, verified to commute with
// the closures of the c-construction.
PointMap transfer_isomorphism(const GradedLatticeView& l1, const GradedLatticeView& l2, const std::vector<size_t>& f);

// Backtracking search for an isomorphism, pruned by closures of pairs and
// triples of assigned points. nullopt if none exists.
std::optional<PointMap> find_isomorphism(const ClosureGeometry& g1, const ClosureGeometry& g2, int max_size = 6);

}  // namespace kmr

#endif  // KMR_GEOMETRY_ISOMORPHISM_H_
