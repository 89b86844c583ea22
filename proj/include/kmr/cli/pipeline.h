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

#ifndef KMR_CLI_PIPELINE_H_
#define KMR_CLI_PIPELINE_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kmr/abc/duality.h"
#include "kmr/geometry/axioms.h"
#include "kmr/geometry/closure.h"
#include "kmr/lattice/lattice_fragment.h"

namespace kmr {

struct SubgroupDecl {
  std::string label;
  std::string generator;
};

struct PipelineConfig {
  uint32_t p = 7;
  uint32_t ell = 3;
  int vars = 5;
  std::vector<SubgroupDecl> universe;
  size_t budget = 50;
  uint64_t seed = 0;
  unsigned workers = 1;
  bool verify = false;

  // ConfigError on p = ell, non-prime values or vars out of range.
  void validate(int min_vars) const;
};

// Fields missing from j keep the values of defaults. Universe entries are
// strings ("expr" or "label=expr") or {"label", "generator"} objects.
PipelineConfig pipeline_config_from_json(const Json& j, PipelineConfig defaults = {});
// The seed and worker count are left out: outputs must not depend on them.
Json to_json(const PipelineConfig& c);
SubgroupDecl parse_decl(const std::string& s);

// Coordinates t1..td and one very general element (t_i + a)/(t_{i+1} + b)
// per coordinate, checked against the coordinate valuations at 0, -1 and
// infinity.
std::vector<SubgroupDecl> default_universe(uint32_t p, uint32_t ell, int vars);

std::vector<RationalSubgroup> build_universe(const PipelineConfig& c);

struct PipelineResult {
  std::vector<RationalSubgroup> universe;
  MultFragment kring;
  LatticeFragment lattice;
  ClosureGeometry geometry;
  AxiomReport axioms;
  size_t verified_certificates = 0;
  size_t certificate_calls = 0;
};

// Step 1: the quadratic fragment (generators and k^M_2 relations). Step 2:
// flats of every rank and the rank-1 recovery. Step 3: c-construction on
// the recovered points. Step 4: axiom report. InsufficientUniverse when
// fewer than two subgroups are declared or fewer than two points are
// recovered.
PipelineResult run_pipeline(const PipelineConfig& c);
PipelineResult run_pipeline(const PipelineConfig& c, std::vector<RationalSubgroup> universe);
// Canonical artifact JSON (sorted keys, no seed).
Json pipeline_json(const PipelineResult& r, const PipelineConfig& c);

struct RoundtripReport {
  std::vector<int> permutation;  // t_i -> t_{permutation[i]}, 0-based
  uint32_t epsilon = 1;
  std::vector<size_t> index_map;  // universe index -> permuted universe index
  std::vector<size_t> point_map;
  std::vector<size_t> expected_point_map;
  bool identity = false;
  bool isomorphism_exhaustive = false;
  std::vector<std::pair<std::string, std::string>> moved;  // points whose label changes
};

// Runs the pipeline on the universe and on its image under the coordinate
// permutation (scaled by epsilon on k^M_1), transfers the induced lattice
// isomorphism to the geometries and compares it with the point map
// recomputed from the member sets. TransferMismatch with a witness when
// they disagree or the transferred map is not a geometry isomorphism.
RoundtripReport run_roundtrip(const PipelineConfig& c, const std::vector<int>& permutation, uint32_t epsilon = 1);
Json to_json(const RoundtripReport& r);

}  // namespace kmr

#endif  // KMR_CLI_PIPELINE_H_
