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

#ifndef KMR_LATTICE_ENGINE_H_
#define KMR_LATTICE_ENGINE_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "kmr/kmilnor/certificate.h"
#include "kmr/lattice/rational_subgroup.h"

namespace kmr {

using Mask = uint64_t;

int popcount(Mask m);
std::vector<size_t> mask_indices(Mask m);
Mask mask_of(const std::vector<size_t>& idx);

// Dimension oracle over a finite universe of rational subgroups (at most 64).
// Upper bounds come from the Jacobian rank of the generators at a fixed
// point of F_{p^12}; lower bounds from certificates, cached by index set.
class UniverseEngine {
 public:
  UniverseEngine(std::vector<RationalSubgroup> universe, CertOptions opt);

  size_t size() const { return universe_.size(); }
  const std::vector<RationalSubgroup>& universe() const { return universe_; }
  const CertOptions& options() const { return opt_; }
  Mask full() const { return universe_.size() == 64 ? ~Mask{0} : (Mask{1} << universe_.size()) - 1; }

  // trdeg of k(x_i : i in mask).
  int rank(Mask m) const;
  // All i with rank(m | i) == rank(m).
  Mask closure(Mask m) const;
  // All flats of rank r, sorted by mask.
  std::vector<Mask> flats(int r) const;

  // Certificate for the symbol {x_i : i in idx} (idx sorted), cached.
  std::optional<Certificate> certify(const std::vector<size_t>& idx) const;
  // Certificate that dim^M of the subgroup generated by mask is >= r:
  // tries the independent r-subsets of mask in lexicographic order, at
  // most max_tries of them.
  std::optional<Certificate> certify_rank(Mask m, int r, size_t max_tries = 6) const;

  size_t certificate_calls() const;

 private:
  std::vector<RationalSubgroup> universe_;
  CertOptions opt_;
  std::vector<std::vector<GroundElem>> gradients_;
  mutable std::mutex mu_;
  mutable std::map<Mask, int> rank_cache_;
  mutable std::map<Mask, std::optional<Certificate>> cert_cache_;
  mutable size_t calls_ = 0;
};

}  // namespace kmr

#endif  // KMR_LATTICE_ENGINE_H_
