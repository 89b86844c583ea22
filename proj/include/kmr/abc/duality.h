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

#ifndef KMR_ABC_DUALITY_H_
#define KMR_ABC_DUALITY_H_

#include <optional>
#include <string>
#include <vector>

#include "kmr/abc/group.h"
#include "kmr/groundfield/rat_func.h"
#include "kmr/kmilnor/chain.h"

namespace kmr {

// The product map wedge^2(V) -> k^M_2 on the span V of n declared classes,
// known through linear functionals on k^M_2. Each functional is the
// iterated residue along a chain; map has one row per chain. The kernel is
// exact when the relations forced by a factorization of the generators
// (bilinearity, {f, f} = 0, constants are ell-th powers, {b, b + c} = 0)
// already account for the whole kernel of the functionals.
struct MultFragment {
  uint32_t ell = 3;
  std::vector<std::string> labels;
  std::vector<RatFunc> generators;
  std::vector<ParshinChain> chains;
  ModMatrix map;
  Subspace forced_kernel;  // lower bound
  Subspace upper_kernel;   // kernel of the residue functionals
  Subspace kernel;         // forced_kernel; the true kernel when exact
  bool exact = false;

  size_t dim() const { return labels.size(); }
};

// Exponent vectors mod ell of elements over a common factor base found by
// trial division. One-variable remainders are split into linear factors;
// other remainders are kept whole, so the base need not be irreducible.
struct ClassVectors {
  std::vector<SparsePoly> base;
  std::vector<Vec> vectors;
};
ClassVectors class_vectors(const std::vector<RatFunc>& elems, uint32_t ell);

// Forced relations also include the Steinberg relations {b, b + c} = 0 for
// base elements differing by a constant.
MultFragment mult_fragment_bounds(const std::vector<RatFunc>& generators, uint32_t ell, size_t node_limit = 400);
// Same, but DimUnknown when the residue functionals leave part of the
// kernel undecided.
MultFragment mult_fragment(const std::vector<RatFunc>& generators, uint32_t ell, size_t node_limit = 400);
// Abstract fragment with a declared kernel (no field data).
MultFragment mult_fragment_from_kernel(size_t n, const Subspace& kernel);

// The group whose commutator kernel is dual to the product map:
// W = ker(mult) annihilated under the wedge pairing.
AbcGroup dual_group(const MultFragment& m);

struct DualityReport {
  bool pass = false;
  Subspace r;         // kernel of the commutator form of G
  Subspace expected;  // annihilator of ker(mult)
  std::optional<Vec> witness;
  std::string witness_side;  // "in R only" or "in annihilator only"
  bool upsilon_ok = false;
};

DualityReport duality_report(const MultFragment& m, const AbcGroup& g);
// Same, throwing Mismatch (with the witness vector) when R differs from the
// annihilator of ker(mult) or Upsilon fails the pairing identity.
DualityReport duality_check(const MultFragment& m, const AbcGroup& g);

Json to_json(const MultFragment& m);
Json to_json(const DualityReport& r);
MultFragment mult_fragment_from_json(const Json& j, const Tower& t, int num_vars);

}  // namespace kmr

#endif  // KMR_ABC_DUALITY_H_
