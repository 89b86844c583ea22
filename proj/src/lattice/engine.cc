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

#include "kmr/lattice/engine.h"

#include <bit>
#include <random>
#include <set>

#include "kmr/errors.h"
#include "kmr/kmilnor/dimension.h"
#include "kmr/parallel.h"

namespace kmr {

int popcount(Mask m) { return std::popcount(m); }

std::vector<size_t> mask_indices(Mask m) {
  std::vector<size_t> out;
  for (size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

Mask mask_of(const std::vector<size_t>& idx) {
  Mask m = 0;
  for (size_t i : idx) m |= Mask{1} << i;
  return m;
}

UniverseEngine::UniverseEngine(std::vector<RationalSubgroup> universe, CertOptions opt)
    : universe_(std::move(universe)), opt_(opt) {
  if (universe_.size() > 64) throw ConfigError("universe larger than 64 subgroups");
  if (universe_.empty()) return;
  const Tower& t = universe_[0].tower();
  int nv = universe_[0].num_vars();
  for (uint64_t k = 0; k < 16 && gradients_.empty(); ++k) {
    std::mt19937_64 rng(mix_seed(0x6a09e667f3bcc908ULL, k));
    std::vector<GroundElem> pt;
    for (int i = 0; i < nv; ++i) pt.push_back(GroundElem::random(t, 12, rng));
    try {
      std::vector<std::vector<GroundElem>> rows;
      for (const auto& u : universe_) rows.push_back(scaled_gradient(separable_root(u.generator), pt));
      gradients_ = std::move(rows);
    } catch (const ZeroError&) {
    }
  }
  if (gradients_.empty()) throw ConfigError("no sample point avoids the poles of the universe");
}

int UniverseEngine::rank(Mask m) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = rank_cache_.find(m);
    if (it != rank_cache_.end()) return it->second;
  }
  std::vector<std::vector<GroundElem>> rows;
  for (size_t i : mask_indices(m)) rows.push_back(gradients_[i]);
  int r = ground_rank(std::move(rows));
  std::lock_guard<std::mutex> lock(mu_);
  rank_cache_[m] = r;
  return r;
}

Mask UniverseEngine::closure(Mask m) const {
  int r = rank(m);
  Mask out = m;
  for (size_t i = 0; i < size(); ++i) {
    Mask b = Mask{1} << i;
    if (!(m & b) && rank(m | b) == r) out |= b;
  }
  return out;
}

std::vector<Mask> UniverseEngine::flats(int r) const {
  if (r <= 0) return {};
  std::set<Mask> out;
  if (r == 1) {
    for (size_t i = 0; i < size(); ++i)
      if (rank(Mask{1} << i) == 1) out.insert(closure(Mask{1} << i));
  } else {
    for (Mask f : flats(r - 1))
      for (size_t i = 0; i < size(); ++i)
        if (!(f & (Mask{1} << i))) out.insert(closure(f | (Mask{1} << i)));
  }
  return {out.begin(), out.end()};
}

std::optional<Certificate> UniverseEngine::certify(const std::vector<size_t>& idx) const {
  Mask key = mask_of(idx);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cert_cache_.find(key);
    if (it != cert_cache_.end()) return it->second;
  }
  std::vector<RatFunc> elems;
  for (size_t i : idx) elems.push_back(universe_[i].generator);
  CertOptions o = opt_;
  o.workers = 1;
  auto cert = certificate_search(elems, o);
  std::lock_guard<std::mutex> lock(mu_);
  ++calls_;
  cert_cache_.emplace(key, cert);
  return cert;
}

std::optional<Certificate> UniverseEngine::certify_rank(Mask m, int r, size_t max_tries) const {
  if (r <= 0) throw ConfigError("certify_rank needs r >= 1");
  std::vector<size_t> elems = mask_indices(m);
  size_t n = elems.size();
  if (static_cast<size_t>(r) > n) return std::nullopt;
  std::vector<size_t> pos(r);
  for (int i = 0; i < r; ++i) pos[i] = i;
  size_t tried = 0;
  for (;;) {
    std::vector<size_t> idx;
    for (size_t q : pos) idx.push_back(elems[q]);
    if (rank(mask_of(idx)) == r) {
      if (auto c = certify(idx)) return c;
      if (++tried >= max_tries) return std::nullopt;
    }
    int k = r - 1;
    while (k >= 0 && pos[k] == n - r + k) --k;
    if (k < 0) return std::nullopt;
    ++pos[k];
    for (int j = k + 1; j < r; ++j) pos[j] = pos[j - 1] + 1;
  }
}

size_t UniverseEngine::certificate_calls() const {
  std::lock_guard<std::mutex> lock(mu_);
  return calls_;
}

}  // namespace kmr
