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

#include "kmr/groundfield/tower.h"

#include <algorithm>
#include <numeric>

#include "kmr/errors.h"

namespace kmr {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::mutex& registry_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::pair<uint32_t, uint64_t>, std::unique_ptr<Tower>>& registry() {
  static std::map<std::pair<uint32_t, uint64_t>, std::unique_ptr<Tower>> r;
  return r;
}

Raw chunk(const Raw& x, size_t i, size_t width) {
  return Raw(x.begin() + i * width, x.begin() + (i + 1) * width);
}

}  // namespace

const std::vector<uint32_t>& Tower::chain() {
  static const std::vector<uint32_t> c = {1, 2, 6, 12, 60, 420, 840, 2520};
  return c;
}

bool Tower::is_chain_level(uint32_t m) {
  const auto& c = chain();
  return std::find(c.begin(), c.end(), m) != c.end();
}

uint32_t Tower::host_level(uint32_t m) {
  if (m == 0) throw LevelError("level must be positive");
  for (uint32_t c : chain())
    if (c % m == 0) return c;
  throw LevelError("level " + std::to_string(m) + " is not contained in the tower chain");
}

Tower::Tower(uint32_t p, uint64_t seed) : p_(p), seed_(seed) {
  auto base = std::make_unique<ChainLevel>();
  base->index = 0;
  base->m = 1;
  base->prev_m = 1;
  base->rel_deg = 1;
  base->abs = FieldCtx(p, Raw{0, 1});
  base->abs_is_rel = true;
  base->to_abs = ModMatrix::identity(1, p);
  base->to_rel = ModMatrix::identity(1, p);
  levels_[0] = std::move(base);
  built_.store(1, std::memory_order_release);
}

const Tower& Tower::get(uint32_t p, uint64_t seed) {
  if (!is_prime(p)) throw ConfigError("characteristic " + std::to_string(p) + " is not prime");
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = registry()[{p, seed}];
  if (!slot) slot.reset(new Tower(p, seed));
  return *slot;
}

const Tower& Tower::load(uint32_t p, uint64_t seed,
                         const std::vector<std::vector<Raw>>& rel_mods) {
  const Tower& t = get(p, seed);
  std::lock_guard<std::mutex> lock(t.grow_mu_);
  for (size_t i = 0; i < rel_mods.size(); ++i) {
    size_t idx = i + 1;
    if (idx >= kMaxLevels) throw LevelError("too many levels in sidecar");
    if (idx < t.built_levels()) {
      if (t.levels_[idx]->rel_mod != rel_mods[i])
        throw LevelError("sidecar disagrees with already built level " +
                         std::to_string(chain()[idx]));
    } else {
      t.build_next(&rel_mods[i]);
    }
  }
  return t;
}

const ChainLevel& Tower::level(uint32_t m) const {
  const auto& c = chain();
  auto it = std::find(c.begin(), c.end(), m);
  if (it == c.end()) throw LevelError(std::to_string(m) + " is not a chain level");
  size_t idx = static_cast<size_t>(it - c.begin());
  if (idx < built_.load(std::memory_order_acquire)) return *levels_[idx];
  std::lock_guard<std::mutex> lock(grow_mu_);
  while (built_.load(std::memory_order_acquire) <= idx) build_next(nullptr);
  return *levels_[idx];
}

void Tower::build_next(const std::vector<Raw>* preset) const {
  size_t idx = built_.load(std::memory_order_acquire);
  const ChainLevel& prev = *levels_[idx - 1];
  auto lvl = std::make_unique<ChainLevel>();
  lvl->index = static_cast<uint32_t>(idx);
  lvl->m = chain()[idx];
  lvl->prev_m = prev.m;
  lvl->rel_deg = lvl->m / prev.m;
  const uint32_t k = lvl->rel_deg, pm = prev.m, m = lvl->m;

  auto to_prev_abs = [&](const Raw& r) { return prev.abs_is_rel ? r : prev.to_abs.apply(r); };

  std::mt19937_64 rng(seed_ ^ (uint64_t(p_) << 32) ^ (0x9e3779b97f4a7c15ULL * (idx + 1)));
  if (preset) {
    lvl->rel_mod = *preset;
    UPoly g;
    for (const Raw& c : lvl->rel_mod) g.push_back(to_prev_abs(c));
    if (lvl->rel_mod.size() != k + 1 || !upoly::is_irreducible(prev.abs, g))
      throw LevelError("sidecar modulus for level " + std::to_string(m) + " is not irreducible");
  } else {
    for (;;) {
      std::vector<Raw> cand(k + 1);
      for (uint32_t i = 0; i < k; ++i) {
        cand[i].resize(pm);
        for (auto& c : cand[i]) c = static_cast<uint32_t>(rng() % p_);
      }
      cand[k] = Raw(pm, 0);
      cand[k][0] = 1;
      UPoly g;
      for (const Raw& c : cand) g.push_back(to_prev_abs(c));
      upoly::trim(prev.abs, g);
      if (upoly::degree(g) == static_cast<int>(k) && upoly::is_irreducible(prev.abs, g)) {
        lvl->rel_mod = cand;
        break;
      }
    }
  }

  if (idx == 1) {
    Raw mod;
    for (const Raw& c : lvl->rel_mod) mod.push_back(c[0]);
    lvl->abs = FieldCtx(p_, mod);
    lvl->abs_is_rel = true;
    lvl->to_abs = ModMatrix::identity(m, p_);
    lvl->to_rel = ModMatrix::identity(m, p_);
  } else {
    // Multiplication in relative coordinates via the previous level.
    auto rel_mul = [&](const Raw& a, const Raw& b) {
      std::vector<Raw> prod(2 * k - 1, Raw(pm, 0));
      for (uint32_t i = 0; i < k; ++i) {
        Raw ai = chunk(a, i, pm);
        if (std::all_of(ai.begin(), ai.end(), [](uint32_t c) { return c == 0; })) continue;
        for (uint32_t j = 0; j < k; ++j)
          prod[i + j] = add(pm, prod[i + j], mul(pm, ai, chunk(b, j, pm)));
      }
      for (size_t i = prod.size() - 1; i >= k; --i) {
        Raw c = prod[i];
        for (uint32_t j = 0; j < k; ++j)
          prod[i - k + j] = sub(pm, prod[i - k + j], mul(pm, c, lvl->rel_mod[j]));
      }
      Raw out;
      for (uint32_t i = 0; i < k; ++i) out.insert(out.end(), prod[i].begin(), prod[i].end());
      return out;
    };
    Raw alpha_prev = prev.abs_is_rel ? prev.abs.generator() : prev.to_rel.apply(prev.abs.generator());
    Raw y(m, 0);
    y[pm] = 1;
    for (uint64_t attempt = 0;; ++attempt) {
      Raw theta = y;
      if (attempt < p_) {
        Raw c = prev.abs.scale(alpha_prev, static_cast<uint32_t>(attempt));
        for (uint32_t j = 0; j < pm; ++j) theta[j] = (theta[j] + c[j]) % p_;
      } else {
        for (auto& c : theta) c = static_cast<uint32_t>(rng() % p_);
      }
      ModMatrix basis(m, m, p_);
      Raw power(m, 0);
      power[0] = 1;
      for (uint32_t j = 0; j < m; ++j) {
        for (uint32_t r = 0; r < m; ++r) basis.at(r, j) = power[r];
        power = rel_mul(power, theta);
      }
      auto inv = basis.inverse();
      if (!inv) continue;
      Raw c = *basis.solve(power);
      Raw mod(m + 1);
      for (uint32_t j = 0; j < m; ++j) mod[j] = (p_ - c[j]) % p_;
      mod[m] = 1;
      lvl->abs = FieldCtx(p_, mod);
      lvl->abs_is_rel = false;
      lvl->to_rel = basis;
      lvl->to_abs = *inv;
      break;
    }
  }
  levels_[idx] = std::move(lvl);
  built_.store(idx + 1, std::memory_order_release);
}

Raw Tower::add(uint32_t m, const Raw& a, const Raw& b) const {
  Raw r(m);
  for (uint32_t i = 0; i < m; ++i) {
    uint32_t s = a[i] + b[i];
    r[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

Raw Tower::sub(uint32_t m, const Raw& a, const Raw& b) const {
  Raw r(m);
  for (uint32_t i = 0; i < m; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
  return r;
}

Raw Tower::neg(uint32_t m, const Raw& a) const {
  Raw r(m);
  for (uint32_t i = 0; i < m; ++i) r[i] = a[i] ? p_ - a[i] : 0;
  return r;
}

Raw Tower::to_abs(uint32_t m, const Raw& rel) const {
  const ChainLevel& l = level(m);
  return l.abs_is_rel ? rel : l.to_abs.apply(rel);
}

Raw Tower::to_rel(uint32_t m, const Raw& abs) const {
  const ChainLevel& l = level(m);
  return l.abs_is_rel ? abs : l.to_rel.apply(abs);
}

Raw Tower::mul(uint32_t m, const Raw& a, const Raw& b) const {
  if (m == 1) return Raw{static_cast<uint32_t>(uint64_t(a[0]) * b[0] % p_)};
  const ChainLevel& l = level(m);
  if (l.abs_is_rel) return l.abs.mul(a, b);
  return l.to_rel.apply(l.abs.mul(l.to_abs.apply(a), l.to_abs.apply(b)));
}

Raw Tower::inv(uint32_t m, const Raw& a) const {
  if (m == 1) return Raw{mod_inverse(a[0], p_)};
  const ChainLevel& l = level(m);
  if (l.abs_is_rel) return l.abs.inv(a);
  return l.to_rel.apply(l.abs.inv(l.to_abs.apply(a)));
}

Raw Tower::pow(uint32_t m, const Raw& a, const BigInt& e) const {
  const ChainLevel& l = level(m);
  return to_rel(m, l.abs.pow(to_abs(m, a), e));
}

Raw Tower::pad(const Raw& x, uint32_t to) const {
  Raw r = x;
  r.resize(to, 0);
  return r;
}

std::pair<uint32_t, Raw> Tower::descend(const Raw& x) const {
  for (uint32_t c : chain()) {
    if (c >= x.size()) break;
    bool fits = true;
    for (size_t i = c; i < x.size(); ++i)
      if (x[i]) {
        fits = false;
        break;
      }
    if (fits) return {c, Raw(x.begin(), x.begin() + c)};
  }
  return {static_cast<uint32_t>(x.size()), x};
}

const std::vector<Raw>& Tower::subfield_basis(uint32_t m) const {
  {
    std::lock_guard<std::mutex> lock(sub_mu_);
    auto it = subfields_.find(m);
    if (it != subfields_.end()) return it->second;
  }
  uint32_t h = host_level(m);
  level(h);
  // Matrix of x -> x^(p^m) on the host level, then its fixed space.
  ModMatrix frob(h, h, p_);
  BigInt e = big_pow(p_, m);
  for (uint32_t j = 0; j < h; ++j) {
    Raw ej(h, 0);
    ej[j] = 1;
    Raw img = pow(h, ej, e);
    for (uint32_t r = 0; r < h; ++r) frob.at(r, j) = img[r];
  }
  for (uint32_t i = 0; i < h; ++i) frob.at(i, i) = (frob.at(i, i) + p_ - 1) % p_;
  Subspace fixed = Subspace::span(frob.kernel(), h, p_);
  if (fixed.dim() != m) throw LevelError("subfield of degree " + std::to_string(m) + " not found");
  std::lock_guard<std::mutex> lock(sub_mu_);
  auto [it, inserted] = subfields_.emplace(m, fixed.basis());
  return it->second;
}

std::vector<std::vector<Raw>> Tower::relative_moduli() const {
  std::vector<std::vector<Raw>> out;
  size_t n = built_levels();
  for (size_t i = 1; i < n; ++i) out.push_back(levels_[i]->rel_mod);
  return out;
}

}  // namespace kmr
