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

#ifndef KMR_GEOMETRY_LCL_H_
#define KMR_GEOMETRY_LCL_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kmr/geometry/closure.h"

namespace kmr {

// First-order formula in the language (cl_n). Grammar (S-expressions):
//   (cl x a1 .. an)   x in cl(a1..an); (clN x a1 .. aN) checks N
//   (= x y) (and f ..) (or f ..) (not f) (implies f g)
//   (exists y f) (forall y f) true false
struct LclFormula {
  enum class Kind { Cl, Eq, And, Or, Not, Implies, Exists, Forall, True, False };
  Kind kind = Kind::True;
  std::vector<std::string> terms;  // Cl, Eq: variables or parameters
  std::string var;                 // Exists, Forall
  std::vector<LclFormula> sub;

  std::string to_string() const;
};

// ParseError on malformed input; ArityMismatch on wrong argument counts.
LclFormula parse_lcl(const std::string& text);

// Free variables in order of first appearance; names in params are
// parameters, not variables.
std::vector<std::string> free_variables(const LclFormula& f, const std::map<std::string, size_t>& params);

struct LclResult {
  std::vector<std::string> vars;
  std::vector<std::vector<size_t>> tuples;  // lexicographic
};

// psi(G; b) by enumeration. vars fixes the tuple order (ArityMismatch if it
// does not list exactly the free variables).
LclResult eval_lcl(const ClosureGeometry& g, const LclFormula& f, const std::map<std::string, size_t>& params,
                   std::optional<std::vector<std::string>> vars = std::nullopt);

bool holds(const ClosureGeometry& g, const LclFormula& f, const std::map<std::string, size_t>& env);

}  // namespace kmr

#endif  // KMR_GEOMETRY_LCL_H_
