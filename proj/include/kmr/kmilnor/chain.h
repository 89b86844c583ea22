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

#ifndef KMR_KMILNOR_CHAIN_H_
#define KMR_KMILNOR_CHAIN_H_

#include <optional>
#include <string>
#include <vector>

#include "kmr/kmilnor/symbol.h"

namespace kmr {

// Discrete Parshin chain of coordinate valuations. Step j acts on the
// residue field of step j-1, so the step variables are pairwise distinct.
// The exponent of each step is its ramification index e_j (for chains
// obtained by monomial_pullback). uniformizers[j] has order 1 at step j
// (before ramification) and order 0 at the earlier steps, whose residues it
// passes through unchanged or not.
struct ParshinChain {
  std::vector<CoordValuation> steps;
  std::vector<RatFunc> uniformizers;

  size_t length() const { return steps.size(); }
  std::vector<uint32_t> ram_indices() const;
  // True when some ramification index is divisible by ell.
  bool ell_ramified(uint32_t ell) const;
  // Throws ConfigError or NotUniformizer when the chain is malformed.
  void validate() const;
  // Uniformizer of step j as an element of the residue field of step j-1.
  RatFunc residue_uniformizer(size_t j) const;
  ParshinChain prefix(size_t s) const;
  // Steps s..r-1 as a chain on the residue field of the prefix.
  ParshinChain suffix(size_t s) const;
  std::string to_string() const;
};

// The chain t_{vars[0]} = centers[0], t_{vars[1]} = centers[1], ... with the
// canonical uniformizers t - a (or 1/t at infinity).
ParshinChain coordinate_chain(const Tower& t, int num_vars, const std::vector<int>& vars,
                              const std::vector<std::optional<GroundElem>>& centers);

// Iterated residue of s along c. A symbol of degree r along a chain of
// length r gives a degree 0 symbol, i.e. an element of Z/ell.
FormalSymbol tame_chain(const FormalSymbol& s, const ParshinChain& c);
FormalSymbol tame_chain(const Symbol& s, uint32_t ell, const ParshinChain& c);

// Chain for the Kummer cover replacing each chain coordinate by s^e_j.
// BadExponent if some e_j <= 0 or p divides e_j.
ParshinChain monomial_pullback(const ParshinChain& c, const std::vector<int64_t>& exponents);

}  // namespace kmr

#endif  // KMR_KMILNOR_CHAIN_H_
