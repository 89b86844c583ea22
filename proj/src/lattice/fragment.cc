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

#include "kmr/lattice/fragment.h"

#include <algorithm>

#include "kmr/errors.h"
#include "kmr/kmilnor/dimension.h"

namespace kmr {

std::string SubgroupFragment::to_string() const {
  std::string s = label.empty() ? "Omega" : label;
  s += "<";
  for (size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i].to_string();
  return s + ">[" + std::to_string(closure_rank) + "]";
}

SubgroupFragment omega(const std::vector<RatFunc>& generators, const std::string& label) {
  SubgroupFragment out;
  out.label = label;
  for (const auto& g : generators) {
    if (g.is_zero()) throw ZeroInputError("zero generator");
    if (g.is_constant()) continue;
    RatFunc h = separable_root(g).unit_normalized();
    bool dup = false;
    for (const auto& e : out.generators) dup |= e.structurally_equal(h);
    if (!dup) out.generators.push_back(h);
  }
  out.closure_rank = jacobian_rank(out.generators);
  return out;
}

std::optional<std::vector<size_t>> transcendence_basis(const std::vector<RatFunc>& gens, int r) {
  std::vector<size_t> idx;
  // Greedy selection gives the lexicographically first independent subset.
  for (size_t i = 0; i < gens.size() && static_cast<int>(idx.size()) < r; ++i) {
    std::vector<RatFunc> trial;
    for (size_t j : idx) trial.push_back(gens[j]);
    trial.push_back(gens[i]);
    if (jacobian_rank(trial) == static_cast<int>(trial.size())) idx.push_back(i);
  }
  if (static_cast<int>(idx.size()) < r) return std::nullopt;
  return idx;
}

namespace {

std::optional<Distinction> one_way(const SubgroupFragment& outer, const SubgroupFragment& inner,
                                   const CertOptions& opt, bool first_outside) {
  auto basis = transcendence_basis(inner.generators, inner.closure_rank);
  if (!basis) return std::nullopt;
  std::vector<RatFunc> base;
  for (size_t j : *basis) base.push_back(inner.generators[j]);
  for (size_t i = 0; i < outer.generators.size(); ++i) {
    std::vector<RatFunc> stmt = base;
    stmt.push_back(outer.generators[i]);
    if (jacobian_rank(stmt) != static_cast<int>(stmt.size())) continue;
    if (auto cert = certificate_search(stmt, opt)) return Distinction{first_outside, i, *basis, *cert};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Distinction> distinguish(const SubgroupFragment& f1, const SubgroupFragment& f2,
                                       const CertOptions& opt) {
  if (auto d = one_way(f1, f2, opt, true)) return d;
  return one_way(f2, f1, opt, false);
}

}  // namespace kmr
