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

#ifndef KMR_GEOMETRY_AXIOMS_H_
#define KMR_GEOMETRY_AXIOMS_H_

#include <cstdint>
#include <optional>
#include <string>

#include "kmr/geometry/closure.h"

namespace kmr {

struct AxiomWitness {
  PointSet set = 0;  // A
  std::optional<size_t> a, b;
  std::string message;
};

struct AxiomResult {
  bool pass = true;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  AxiomResult closure, geometry, exchange;
  std::string finite_character = "vacuous";  // finite universe
  bool exhaustive = false;
  size_t subsets_checked = 0;

  bool all_pass() const { return closure.pass && geometry.pass && exchange.pass; }
};

struct AxiomOptions {
  size_t exhaustive_limit = 12;  // points
  size_t samples = 4000;         // random subsets above the limit
  uint64_t seed = 0;
};

// Exhaustive over all subsets up to exhaustive_limit points. Above it:
// every subset of size <= 2, every closure of such a subset, and seeded
// random subsets.
AxiomReport check_axioms(const ClosureGeometry& g, const AxiomOptions& opt = {});

Json to_json(const AxiomReport& r, const ClosureGeometry& g);

}  // namespace kmr

#endif  // KMR_GEOMETRY_AXIOMS_H_
