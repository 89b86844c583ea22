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

#ifndef KMR_LATTICE_FRAGMENT_H_
#define KMR_LATTICE_FRAGMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "kmr/kmilnor/certificate.h"

namespace kmr {

// Fragment of Omega_K(L) given by generators of L. closure_rank is the
// transcendence degree of k(generators).
struct SubgroupFragment {
  std::string label;
  std::vector<RatFunc> generators;
  int closure_rank = 0;

  std::string to_string() const;
};

// Generators are reduced to separable classes, unit normalized and
// deduplicated; constants are dropped. ZeroInputError on a zero input.
SubgroupFragment omega(const std::vector<RatFunc>& generators, const std::string& label = "");

// Certificate that the generator x = outer.generators[element] does not lie
// in Omega_K(L_inner): the statement is a transcendence basis of the inner
// fragment followed by x, possibly shifted.
struct Distinction {
  bool first_outside_second = true;
  size_t element = 0;
  std::vector<size_t> inner_basis;
  Certificate certificate;
};

// First index subset (lexicographic) of gens of size r with Jacobian rank r.
std::optional<std::vector<size_t>> transcendence_basis(const std::vector<RatFunc>& gens, int r);

// Tries a in F1 outside F2, then the other direction. nullopt means the
// budget did not separate them.
std::optional<Distinction> distinguish(const SubgroupFragment& f1, const SubgroupFragment& f2,
                                       const CertOptions& opt);

}  // namespace kmr

#endif  // KMR_LATTICE_FRAGMENT_H_
