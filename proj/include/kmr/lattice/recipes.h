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

#ifndef KMR_LATTICE_RECIPES_H_
#define KMR_LATTICE_RECIPES_H_

#include <string>
#include <utility>
#include <vector>

#include "kmr/lattice/engine.h"
#include "kmr/lattice/fragment.h"

namespace kmr {

// Subgroup generated by the universe members in `members`, maximal within
// the universe subject to dim^M = rank. lower certifies dim^M >= rank; each
// exclusion certifies dim^M >= rank + 1 after adding one more member.
struct FlatRecord {
  Mask members = 0;
  int rank = 0;
  Certificate lower;
  std::vector<std::pair<size_t, Certificate>> exclusions;
};

// Witnesses for a recovered point A = B1 & B2 (all masks over the universe,
// d the index of the extra rational subgroup D).
struct PointWitness {
  Mask b1 = 0, b2 = 0, c = 0, b1p = 0, b2p = 0, e = 0;
  size_t d = 0;
};

struct PointRecord {
  FlatRecord flat;
  PointWitness witness;
};

// Maximal subsets of dim^M = r among the subgroups generated by universe
// subsets (r >= 2). DimUnknown when a lower bound or an exclusion cannot be
// certified.
std::vector<FlatRecord> recover_rank_r(const UniverseEngine& engine, int r);
std::vector<FlatRecord> recover_rank_r(const std::vector<RationalSubgroup>& universe, int r, const CertOptions& opt);

// Same for any r >= 1, without the witness conditions for points.
std::vector<FlatRecord> certified_flats(const UniverseEngine& engine, int r);

// Points A = B1 & B2 that admit witnesses D, B1', B2', C, E and are maximal
// with dim^M = 1 within the universe.
std::vector<PointRecord> recover_rank_1(const UniverseEngine& engine, const std::vector<FlatRecord>& rank2,
                                        const std::vector<FlatRecord>& rank3);

SubgroupFragment flat_fragment(const UniverseEngine& engine, Mask members, const std::string& label = "");

}  // namespace kmr

#endif  // KMR_LATTICE_RECIPES_H_
