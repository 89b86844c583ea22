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

#ifndef KMR_GROUNDFIELD_JSON_IO_H_
#define KMR_GROUNDFIELD_JSON_IO_H_

#include <json.hpp>

#include "kmr/groundfield/rat_func.h"
#include "kmr/groundfield/valuation.h"

namespace kmr {

using Json = nlohmann::json;

Json to_json(const GroundElem& x);
Json to_json(const SparsePoly& f);
Json to_json(const RatFunc& f);
Json to_json(const CoordValuation& v);

GroundElem ground_elem_from_json(const Json& j, const Tower& t);
SparsePoly sparse_poly_from_json(const Json& j, const Tower& t);
// Accepts {"num","den"}, a SparsePoly object, or an expression string.
RatFunc rat_func_from_json(const Json& j, const Tower& t, int num_vars);
CoordValuation coord_valuation_from_json(const Json& j, const Tower& t);

// Deterministic record of the tower choices: {"p","seed","levels":[{"m",
// "rel_mod"}]}. Loading it reproduces the same tower bit for bit.
Json tower_sidecar(const Tower& t);
const Tower& tower_from_sidecar(const Json& j);

}  // namespace kmr

#endif  // KMR_GROUNDFIELD_JSON_IO_H_
