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

#include "kmr/abc/kummer.h"

#include "kmr/errors.h"

namespace kmr {

namespace {

void check_shapes(const ModMatrix& m, const KummerFragment& k, const KummerFragment& l) {
  if (k.ell != l.ell || m.modulus() != k.ell) throw ConfigError("fragments use different ell");
  if (k.dim != l.dim || m.rows() != k.dim || m.cols() != k.dim) throw ConfigError("map and fragments have different dimensions");
  if (k.omega % k.ell == 0 || l.omega % l.ell == 0) throw ConfigError("omega must be a unit");
}

}  // namespace

KummerFragment kummer_fragment(const MultFragment& m, uint32_t omega) {
  return KummerFragment{m.ell, m.dim(), m.kernel, omega % m.ell};
}

bool carries_onto(const ModMatrix& m, const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return false;
  ModMatrix w = wedge_square(m);
  std::vector<Vec> img;
  for (const Vec& v : a.basis()) {
    img.push_back(w.apply(v));
    if (!b.contains(img.back())) return false;
  }
  return Subspace::span(img, b.ambient_dim(), b.modulus()).dim() == b.dim();
}

KummerMap kummer_bridge(const ModMatrix& phi, const KummerFragment& k, const KummerFragment& l) {
  check_shapes(phi, k, l);
  uint32_t ell = k.ell;
  if (!phi.inverse()) throw NotCompatible("phi is not invertible");
  if (!carries_onto(phi, k.k2_kernel, l.k2_kernel))
    throw NotCompatible("phi does not descend to the k^M_2 fragments");
  uint32_t c = static_cast<uint32_t>(uint64_t(l.omega) * mod_inverse(k.omega, ell) % ell);
  KummerMap out;
  out.psi = phi.transpose().scaled(c);
  out.psi_inverse = *out.psi.inverse();
  size_t n = k.dim;
  for (size_t s = 0; s < n; ++s)
    for (size_t x = 0; x < n; ++x) {
      Vec es(n, 0), ex(n, 0);
      es[s] = 1;
      ex[x] = 1;
      uint64_t lhs = uint64_t(l.omega) * vec_dot(es, phi.apply(ex), ell) % ell;
      uint64_t rhs = uint64_t(k.omega) * vec_dot(out.psi.apply(es), ex, ell) % ell;
      ++out.pairings_checked;
      if (lhs != rhs) throw Mismatch("Psi(phi) fails the Kummer pairing relation");
    }
  if (!carries_onto(out.psi, l.commutator_kernel(), k.commutator_kernel()))
    throw Mismatch("Psi(phi) does not respect the commutator kernels");
  return out;
}

ModMatrix kummer_back(const ModMatrix& psi, const KummerFragment& k, const KummerFragment& l) {
  check_shapes(psi, k, l);
  uint32_t ell = k.ell;
  if (!psi.inverse()) throw NotCompatible("psi is not invertible");
  if (!carries_onto(psi, l.commutator_kernel(), k.commutator_kernel()))
    throw NotCompatible("psi does not respect the commutator kernels");
  uint32_t c = static_cast<uint32_t>(uint64_t(k.omega) * mod_inverse(l.omega, ell) % ell);
  return psi.transpose().scaled(c);
}

Json to_json(const KummerFragment& f) {
  Json j;
  j["ell"] = f.ell;
  j["dim"] = f.dim;
  j["k2_kernel"] = f.k2_kernel.basis();
  j["omega"] = f.omega;
  return j;
}

KummerFragment kummer_fragment_from_json(const Json& j) {
  try {
    KummerFragment f;
    f.ell = j.at("ell").get<uint32_t>();
    f.dim = j.at("dim").get<size_t>();
    f.omega = j.value("omega", 1u);
    std::vector<Vec> rows = j.value("k2_kernel", std::vector<Vec>{});
    for (const auto& r : rows)
      if (r.size() != wedge_dim(f.dim)) throw ConfigError("kernel vector has the wrong length");
    f.k2_kernel = Subspace::span(rows, wedge_dim(f.dim), f.ell);
    return f;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("Kummer fragment JSON: ") + e.what());
  }
}

Json to_json(const KummerMap& m) {
  Json j;
  j["psi"] = m.psi.row_list();
  j["psi_inverse"] = m.psi_inverse.row_list();
  j["pairings_checked"] = m.pairings_checked;
  return j;
}

}  // namespace kmr
