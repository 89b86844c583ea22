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

#ifndef KMR_ABC_KUMMER_H_
#define KMR_ABC_KUMMER_H_

#include <cstdint>

#include "kmr/abc/duality.h"
#include "kmr/abc/group.h"

namespace kmr {

// A finite fragment of k^M_1 with basis e_1..e_dim, the kernel of its
// product map into k^M_2, and the Kummer pairing against the dual G^a
// fragment, (s, x)_omega = omega * s^T x for a declared unit omega.
struct KummerFragment {
  uint32_t ell = 3;
  size_t dim = 0;
  Subspace k2_kernel;
  uint32_t omega = 1;

  // Commutator kernel of the dual group: the annihilator of k2_kernel.
  Subspace commutator_kernel() const { return k2_kernel.perp(); }
  AbcGroup group() const { return AbcGroup(dim, commutator_kernel(), ell); }
};

KummerFragment kummer_fragment(const MultFragment& m, uint32_t omega = 1);

// Psi(phi) : G^a_L -> G^a_K defined by (s, phi(x))_L = (Psi(phi)(s), x)_K,
// and its inverse G^a_K -> G^a_L (transpose inverse of phi up to the
// omega normalization). Matrices act on column vectors.
struct KummerMap {
  ModMatrix psi;
  ModMatrix psi_inverse;
  size_t pairings_checked = 0;
};

// NotCompatible when phi is singular or wedge^2(phi) does not carry the
// product kernel of K onto that of L. Mismatch if Psi(phi) then fails the
// defining pairing relation or the commutator kernels.
KummerMap kummer_bridge(const ModMatrix& phi, const KummerFragment& k, const KummerFragment& l);
// The inverse direction: recovers phi from Psi(phi). NotCompatible when psi
// is singular or does not carry the commutator kernel of L onto that of K.
ModMatrix kummer_back(const ModMatrix& psi, const KummerFragment& k, const KummerFragment& l);

// True when wedge^2(m) maps the subspace a onto b.
bool carries_onto(const ModMatrix& m, const Subspace& a, const Subspace& b);

Json to_json(const KummerFragment& f);
KummerFragment kummer_fragment_from_json(const Json& j);
Json to_json(const KummerMap& m);

}  // namespace kmr

#endif  // KMR_ABC_KUMMER_H_
