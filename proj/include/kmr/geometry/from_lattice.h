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

#ifndef KMR_GEOMETRY_FROM_LATTICE_H_
#define KMR_GEOMETRY_FROM_LATTICE_H_

#include "kmr/geometry/closure.h"
#include "kmr/lattice/lattice_fragment.h"

namespace kmr {

// Points are the rank-1 nodes, labelled by their member sets; a point lies
// below a node when its members do.
GradedLatticeView lattice_view(const LatticeFragment& L);

}  // namespace kmr

#endif  // KMR_GEOMETRY_FROM_LATTICE_H_
