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

#include "kmr/geometry/from_lattice.h"

#include "kmr/errors.h"

namespace kmr {

GradedLatticeView lattice_view(const LatticeFragment& L) {
  GradedLatticeView v;
  std::vector<size_t> pts = L.nodes_of_rank(1);
  if (pts.size() > 64) throw ConfigError("more than 64 points");
  for (size_t i : pts) {
    v.point_labels.push_back(node_label(L, i));
    v.point_node.push_back(i);
  }
  for (size_t i = 0; i < L.nodes.size(); ++i) {
    PointSet below = 0;
    for (size_t k = 0; k < pts.size(); ++k)
      if ((L.nodes[pts[k]].members & L.nodes[i].members) == L.nodes[pts[k]].members) below |= PointSet{1} << k;
    v.rank.push_back(L.nodes[i].rank);
    v.below.push_back(below);
    v.key.push_back(L.nodes[i].members);
    v.node_labels.push_back(L.nodes[i].id);
  }
  return v;
}

}  // namespace kmr
