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

#ifndef KMR_LATTICE_RIGIDITY_H_
#define KMR_LATTICE_RIGIDITY_H_

#include <optional>
#include <string>
#include <vector>

#include "kmr/lattice/rational_subgroup.h"
#include "kmr/modlinalg.h"

namespace kmr {

// Finite-rank model of a piece of k^M_1(K): V = (Z/ell)^dim with a basis of
// classes. A rational fragment is spanned by members; divisors[i] lists the
// coefficients of div_ell(members[i]) on `points`. Each point w gives the
// subgroup T_w of members whose divisor vanishes at w.
struct RigidityFragment {
  std::string label;
  std::vector<Vec> members;
  std::vector<std::string> points;
  std::vector<Vec> divisors;
};

struct RigidityModel {
  uint32_t ell = 3;
  size_t dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<RigidityFragment> fragments;
};

struct CounterexampleReport {
  // inconsistent_scalars: two points of one fragment give different scalars.
  // not_scalar: Phi differs from eps * id on a vector (witness).
  // missing_triangle: fragments in different components carry different
  //   scalars and no fragment links them.
  std::string kind;
  std::string message;
  std::vector<std::string> fragments;
  std::vector<std::string> points;
  std::vector<uint32_t> scalars;
  Vec witness;
};

struct RigidityResult {
  std::optional<uint32_t> epsilon;
  std::optional<CounterexampleReport> report;
  std::vector<uint32_t> fragment_epsilon;
  // Connected components of the fragments under shared classes and
  // triangles C & (A + B) not inside A or B.
  std::vector<std::vector<size_t>> components;
  bool spans_ambient = false;
};

// Phi is a dim x dim matrix acting on column vectors. NotPreserving (with
// the offending vector in the message) when Phi does not preserve a
// fragment or one of its T_w.
RigidityResult epsilon_rigidity_check(const ModMatrix& phi, const RigidityModel& model);

// Model for rational subgroups with members x - c, c in points[i] (all
// finite), and infinity added to each point list. The basis of V consists
// of the distinct monic factors of numerators and denominators found by
// trial division; a remainder that is not divisible by a known factor is
// taken as a new irreducible factor.
RigidityModel rigidity_model(const std::vector<RationalSubgroup>& subgroups,
                             const std::vector<std::vector<GroundElem>>& points, uint32_t ell);

}  // namespace kmr

#endif  // KMR_LATTICE_RIGIDITY_H_
