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

#ifndef KMR_GROUNDFIELD_TOWER_H_
#define KMR_GROUNDFIELD_TOWER_H_

#include <array>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "kmr/groundfield/field_ctx.h"
#include "kmr/modlinalg.h"

namespace kmr {

inline constexpr uint64_t kDefaultTowerSeed = 20260101;

// One level F_{p^m} of the chain. Elements are stored in "relative"
// coordinates: level i is level i-1 adjoined a root y of rel_mod, and an
// element is the flattened list of its rel_deg coefficients (each a level
// i-1 element). With this basis the embedding of level i-1 into level i is
// zero padding. Multiplication goes through an absolute model
// F_p[x]/(abs_mod) via the change of basis matrices.
struct ChainLevel {
  uint32_t index = 0;
  uint32_t m = 1;
  uint32_t prev_m = 1;
  uint32_t rel_deg = 1;
  std::vector<Raw> rel_mod;  // rel_deg + 1 coefficients over level i-1, monic
  FieldCtx abs;
  bool abs_is_rel = true;
  ModMatrix to_abs;  // relative -> absolute coordinates
  ModMatrix to_rel;  // absolute -> relative coordinates
};

// A compatible system of finite fields F_{p^m} for m in the divisibility
// chain 1, 2, 6, 12, 60, 420, 840, 2520 (m_k = lcm(1..k)). Levels are built
// lazily and never change once built. Towers are interned per (p, seed).
class Tower {
 public:
  static constexpr size_t kMaxLevels = 8;

  static const Tower& get(uint32_t p, uint64_t seed = kDefaultTowerSeed);
  // Installs a tower whose relative moduli are given (e.g. from a sidecar).
  // If the tower already exists, its built levels must agree.
  static const Tower& load(uint32_t p, uint64_t seed,
                           const std::vector<std::vector<Raw>>& rel_mods);

  static const std::vector<uint32_t>& chain();
  static bool is_chain_level(uint32_t m);
  // Smallest chain level divisible by m.
  static uint32_t host_level(uint32_t m);

  uint32_t p() const { return p_; }
  uint64_t seed() const { return seed_; }

  // m must be a chain level; builds it (and all below) if needed.
  const ChainLevel& level(uint32_t m) const;
  size_t built_levels() const { return built_.load(std::memory_order_acquire); }

  // Field operations at chain level m, relative coordinates.
  Raw add(uint32_t m, const Raw& a, const Raw& b) const;
  Raw sub(uint32_t m, const Raw& a, const Raw& b) const;
  Raw neg(uint32_t m, const Raw& a) const;
  Raw mul(uint32_t m, const Raw& a, const Raw& b) const;
  Raw inv(uint32_t m, const Raw& a) const;
  Raw pow(uint32_t m, const Raw& a, const BigInt& e) const;
  Raw to_abs(uint32_t m, const Raw& rel) const;
  Raw to_rel(uint32_t m, const Raw& abs) const;

  // Zero padding from chain level `from` to chain level `to`.
  Raw pad(const Raw& x, uint32_t to) const;
  // Smallest chain level containing x (given at chain level m), truncated.
  std::pair<uint32_t, Raw> descend(const Raw& x) const;

  // Basis of F_{p^m} inside its host chain level, as m rows of host-level
  // relative coordinates (canonical row echelon form). Only used for levels
  // outside the chain.
  const std::vector<Raw>& subfield_basis(uint32_t m) const;

  std::vector<std::vector<Raw>> relative_moduli() const;

 private:
  Tower(uint32_t p, uint64_t seed);
  void build_next(const std::vector<Raw>* preset) const;

  uint32_t p_;
  uint64_t seed_;
  mutable std::array<std::unique_ptr<ChainLevel>, kMaxLevels> levels_;
  mutable std::atomic<size_t> built_{0};
  mutable std::mutex grow_mu_;
  mutable std::mutex sub_mu_;
  mutable std::map<uint32_t, std::vector<Raw>> subfields_;
};

}  // namespace kmr

#endif  // KMR_GROUNDFIELD_TOWER_H_
