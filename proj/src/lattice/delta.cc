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

#include "kmr/lattice/delta.h"

#include <random>

#include "kmr/errors.h"
#include "kmr/kmilnor/dimension.h"
#include "kmr/parallel.h"

namespace kmr {

bool DeltaSet::in_entry_subgroup(size_t i, const RatFunc& member) const {
  Divisor d = div_ell(member, base, ell);
  return !d.count(entries.at(i).point);
}

std::optional<DeltaEntry> restrict_to_rational(const RatFunc& x, const CoordValuation& v) {
  OrderResidue o = order_and_residue(x, v);
  if (o.order > 0) return DeltaEntry{v, P1Point{GroundElem::zero(x.tower())}, o.order};
  if (o.order < 0) return DeltaEntry{v, P1Point{}, -o.order};
  if (!o.residue.is_constant()) return std::nullopt;
  GroundElem c = o.residue.constant_value();
  RatFunc shifted = x - RatFunc::constant(x.tower(), x.num_vars(), c);
  return DeltaEntry{v, P1Point{c}, valuation_order(shifted, v)};
}

DeltaSet delta_set(const RationalSubgroup& A, const std::vector<CoordValuation>& ambient, uint32_t ell) {
  DeltaSet out{A, ell, {}, {}};
  for (const auto& v : ambient) {
    auto e = restrict_to_rational(A.generator, v);
    if (!e || e->multiplicity % ell == 0) {
      out.skipped.push_back(v);
      continue;
    }
    out.entries.push_back(*e);
  }
  return out;
}

namespace {

GroundElem sample(const Tower& t, size_t i, std::mt19937_64& rng) {
  if (i < 6) return GroundElem::from_int(t, static_cast<int64_t>(i + 1));
  static const uint32_t levels[] = {1, 2, 6};
  return GroundElem::random(t, levels[i % 3], rng);
}

}  // namespace

std::optional<VeryGeneralResult> very_general_search(const RatFunc& x, const RatFunc& y, size_t budget,
                                                     const std::vector<CoordValuation>& ambient, uint32_t ell,
                                                     uint64_t seed) {
  const Tower& t = x.tower();
  int nv = x.num_vars();
  std::vector<CoordValuation> rejected;
  // Six values of a per value of b.
  constexpr size_t kInner = 6;
  for (size_t trial = 0; trial < budget; ++trial) {
    std::mt19937_64 rng_b(mix_seed(seed, 2 * (trial / kInner)));
    std::mt19937_64 rng_a(mix_seed(seed, 2 * trial + 1));
    GroundElem b = sample(t, trial / kInner, rng_b);
    GroundElem a = sample(t, trial % kInner + (trial >= 6 * kInner ? 6 : 0), rng_a);
    RatFunc num = x + RatFunc::constant(t, nv, a), den = y + RatFunc::constant(t, nv, b);
    if (num.is_zero() || den.is_zero()) continue;
    RatFunc z = num / den;
    if (z.is_constant() || z.all_derivatives_vanish() || jacobian_rank({z}) != 1) continue;
    std::optional<CoordValuation> bad;
    for (const auto& v : ambient) {
      auto e = restrict_to_rational(z, v);
      if (e && e->multiplicity % ell == 0) {
        bad = v;
        break;
      }
    }
    if (bad) {
      rejected.push_back(*bad);
      continue;
    }
    return VeryGeneralResult{a, b, z, trial, rejected};
  }
  return std::nullopt;
}

}  // namespace kmr
