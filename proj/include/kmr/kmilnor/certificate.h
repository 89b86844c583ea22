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

#ifndef KMR_KMILNOR_CERTIFICATE_H_
#define KMR_KMILNOR_CERTIFICATE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "kmr/kmilnor/chain.h"

namespace kmr {

// A proof that statement != 0 in k^M_r(K): its iterated residue along chain
// (of length r) is the nonzero element value of Z/ell.
struct Certificate {
  Symbol statement;
  ParshinChain chain;
  uint32_t ell = 0;
  uint32_t value = 0;
  // Shift vector a with statement = {x1 - a1, ..., xr - ar} (empty if the
  // statement is the input itself), and the trial that produced it.
  std::vector<GroundElem> shift;
  size_t trial = 0;

  // Re-evaluates the chain on the statement.
  bool replay() const;
};

struct CertOptions {
  uint32_t ell = 3;
  size_t budget = 50;  // number of trials (shift vectors)
  uint64_t seed = 0;
  unsigned workers = 1;
  bool allow_shifts = false;
  size_t node_limit = 400;  // residue evaluations per trial
};

// Searches coordinate chains on which the symbol has a nonzero residue.
// The chain search only visits centers where some entry has nonzero order,
// so it is finite and deterministic; nullopt when nothing is found within
// node_limit residue evaluations.
std::optional<Certificate> certify_symbol(const Symbol& s, uint32_t ell, size_t node_limit = 400);

// Trial 0 certifies {x1,...,xr} in the fixed exploration order. Later
// trials either explore the chains in a seeded random order (the statement
// stays {x1,...,xr}) or, with allow_shifts, certify {x1 - a1,...,xr - ar}
// for a = (1,...,1) in trial 1 and random a drawn from F_{p^m}, m cycling
// through 1, 2, 6, afterwards. Trials run in parallel; the certificate of
// the smallest successful trial is returned, so the result is independent
// of the number of workers. nullopt means Unknown.
std::optional<Certificate> certificate_search(const std::vector<RatFunc>& elements, const CertOptions& opt);

}  // namespace kmr

#endif  // KMR_KMILNOR_CERTIFICATE_H_
