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

#ifndef KMR_LATTICE_LATTICE_FRAGMENT_H_
#define KMR_LATTICE_LATTICE_FRAGMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "kmr/groundfield/json_io.h"
#include "kmr/lattice/delta.h"
#include "kmr/lattice/fragment.h"
#include "kmr/lattice/recipes.h"
#include "kmr/lattice/rigidity.h"

namespace kmr {

struct LatticeNode {
  std::string id;
  int rank = 0;
  Mask members = 0;
  FlatRecord record;
  std::optional<PointWitness> witness;  // rank-1 nodes
};

// Containment edge of the Hasse diagram; lower and upper index nodes. The
// containment proof is the inclusion of member sets.
struct LatticeEdge {
  size_t lower = 0, upper = 0;
};

// Finite fragment of the graded lattice over a declared universe. Node
// ranks are certified (lower) and Jacobian (upper) dimensions; maximality
// is relative to the universe.
struct LatticeFragment {
  std::vector<RationalSubgroup> universe;
  uint32_t ell = 3;
  std::vector<LatticeNode> nodes;  // sorted by (rank, members)
  std::vector<LatticeEdge> edges;

  std::vector<size_t> nodes_of_rank(int r) const;
  int top_rank() const;
  // Smallest-rank node containing m, nullopt if none or not unique.
  std::optional<size_t> join(Mask m) const;
  // Replays every certificate; returns the number replayed, throws
  // Mismatch on a failed replay.
  size_t verify() const;
};

// Points from recover_rank_1 and flats of ranks 2..rank(universe) from
// recover_rank_r. Needs rank(universe) >= 3 for points to appear.
LatticeFragment build_lattice(const UniverseEngine& engine);
// Node list given explicitly; edges are computed.
LatticeFragment assemble_lattice(const std::vector<RationalSubgroup>& universe, uint32_t ell,
                                 std::vector<LatticeNode> nodes);

std::string node_label(const LatticeFragment& L, size_t node);

Json to_json(const RationalSubgroup& A);
RationalSubgroup rational_subgroup_from_json(const Json& j, const Tower& t, int num_vars);
Json to_json(const SubgroupFragment& f);
Json to_json(const Distinction& d);
Json to_json(const Divisor& d);
Json to_json(const FlatRecord& f, const std::vector<RationalSubgroup>& universe);
Json to_json(const LatticeFragment& L);
std::string to_dot(const LatticeFragment& L);
Json to_json(const DeltaSet& d);
Json to_json(const RigidityModel& m);
RigidityModel rigidity_model_from_json(const Json& j);
Json to_json(const RigidityResult& r);
Json to_json(const VeryGeneralResult& r);

}  // namespace kmr

#endif  // KMR_LATTICE_LATTICE_FRAGMENT_H_
