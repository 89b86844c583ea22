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

#include "kmr/lattice/recipes.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "kmr/errors.h"
#include "kmr/parallel.h"

namespace kmr {

namespace {

std::string mask_string(const UniverseEngine& engine, Mask m) {
  std::string s = "{";
  bool first = true;
  for (size_t i : mask_indices(m)) {
    s += (first ? "" : ", ") + engine.universe()[i].label;
    first = false;
  }
  return s + "}";
}

FlatRecord certify_flat(const UniverseEngine& engine, Mask f, int r) {
  FlatRecord rec;
  rec.members = f;
  rec.rank = r;
  auto lower = engine.certify_rank(f, r);
  if (!lower) throw DimUnknown("no certificate for dim >= " + std::to_string(r) + " on " + mask_string(engine, f));
  rec.lower = *lower;
  for (size_t z = 0; z < engine.size(); ++z) {
    Mask b = Mask{1} << z;
    if (f & b) continue;
    auto ex = engine.certify_rank(f | b, r + 1);
    if (!ex)
      throw DimUnknown("cannot separate dim " + std::to_string(r) + " from " + std::to_string(r + 1) + " on " +
                       mask_string(engine, f | b));
    rec.exclusions.emplace_back(z, *ex);
  }
  return rec;
}

}  // namespace

std::vector<FlatRecord> certified_flats(const UniverseEngine& engine, int r) {
  std::vector<Mask> fl = engine.flats(r);
  std::vector<FlatRecord> out(fl.size());
  parallel_for(fl.size(), engine.options().workers, [&](size_t i) { out[i] = certify_flat(engine, fl[i], r); });
  return out;
}

std::vector<FlatRecord> recover_rank_r(const UniverseEngine& engine, int r) {
  if (r < 2) throw ConfigError("recover_rank_r needs r >= 2");
  return certified_flats(engine, r);
}

std::vector<FlatRecord> recover_rank_r(const std::vector<RationalSubgroup>& universe, int r, const CertOptions& opt) {
  UniverseEngine engine(universe, opt);
  return recover_rank_r(engine, r);
}

std::vector<PointRecord> recover_rank_1(const UniverseEngine& engine, const std::vector<FlatRecord>& rank2,
                                        const std::vector<FlatRecord>& rank3) {
  std::set<Mask> r3;
  for (const auto& f : rank3) r3.insert(f.members);
  std::map<Mask, PointWitness> found;
  for (size_t i = 0; i < rank2.size(); ++i) {
    for (size_t j = i + 1; j < rank2.size(); ++j) {
      Mask b1 = rank2[i].members, b2 = rank2[j].members;
      Mask a = b1 & b2;
      if (!a || found.count(a)) continue;
      Mask c = engine.closure(b1 | b2);
      if (!r3.count(c)) continue;
      for (size_t z = 0; z < engine.size(); ++z) {
        Mask zb = Mask{1} << z;
        if (c & zb) continue;
        Mask b1p = engine.closure(b1 | zb), b2p = engine.closure(b2 | zb);
        if (!r3.count(b1p) || !r3.count(b2p)) continue;
        std::optional<Mask> e;
        for (const auto& f : rank2)
          if ((f.members & b1p & b2p) == f.members) {
            e = f.members;
            break;
          }
        if (!e) continue;
        found.emplace(a, PointWitness{b1, b2, c, b1p, b2p, *e, z});
        break;
      }
    }
  }
  std::vector<std::pair<Mask, PointWitness>> cand(found.begin(), found.end());
  std::vector<PointRecord> out(cand.size());
  parallel_for(cand.size(), engine.options().workers, [&](size_t i) {
    out[i].flat = certify_flat(engine, cand[i].first, 1);
    out[i].witness = cand[i].second;
  });
  return out;
}

SubgroupFragment flat_fragment(const UniverseEngine& engine, Mask members, const std::string& label) {
  SubgroupFragment f;
  f.label = label;
  for (size_t i : mask_indices(members)) f.generators.push_back(engine.universe()[i].generator);
  f.closure_rank = engine.rank(members);
  return f;
}

}  // namespace kmr
