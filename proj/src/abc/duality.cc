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

#include "kmr/abc/duality.h"

#include <bit>
#include <map>

#include "kmr/errors.h"
#include "kmr/groundfield/roots.h"
#include "kmr/kmilnor/certificate.h"
#include "kmr/kmilnor/json_io.h"

namespace kmr {

namespace {

// Exponents of f over the base (trial division; a remainder becomes a new
// base element). Only a factorization is needed, not irreducibility.
void factor_over(const SparsePoly& f, int64_t sign, std::vector<SparsePoly>& base, std::map<size_t, int64_t>& exps) {
  SparsePoly g = f;
  for (size_t i = 0; i < base.size() && !g.is_constant(); ++i) {
    while (auto q = g.divide_exact(base[i])) {
      g = *q;
      exps[i] += sign;
    }
  }
  if (g.is_constant()) return;
  auto add_base = [&](const SparsePoly& m, int64_t e) {
    for (size_t i = 0; i < base.size(); ++i)
      if (base[i] == m) {
        exps[i] += sign * e;
        return;
      }
    base.push_back(m);
    exps[base.size() - 1] += sign * e;
  };
  uint32_t supp = g.support();
  if ((supp & (supp - 1)) == 0) {
    // One variable: split into linear factors with multiplicities.
    int v = std::countr_zero(supp);
    for (const auto& r : univariate_roots(g, v)) {
      SparsePoly lin = SparsePoly::variable(g.tower(), g.num_vars(), v) - SparsePoly::constant(g.tower(), g.num_vars(), r.root);
      add_base(lin, r.mult);
    }
    return;
  }
  add_base(g.monic(), 1);
}

Vec to_vec(const std::map<size_t, int64_t>& exps, size_t dim, uint32_t ell) {
  Vec v(dim, 0);
  for (auto [i, e] : exps) v[i] = mod_reduce(e, ell);
  return v;
}

}  // namespace

ClassVectors class_vectors(const std::vector<RatFunc>& elems, uint32_t ell) {
  ClassVectors out;
  std::vector<std::map<size_t, int64_t>> raw(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].is_zero()) throw ZeroInputError("zero element has no class");
    factor_over(elems[i].num(), 1, out.base, raw[i]);
    factor_over(elems[i].den(), -1, out.base, raw[i]);
  }
  for (const auto& r : raw) out.vectors.push_back(to_vec(r, out.base.size(), ell));
  return out;
}

MultFragment mult_fragment_bounds(const std::vector<RatFunc>& generators, uint32_t ell, size_t node_limit) {
  size_t n = generators.size();
  if (n < 2) throw ConfigError("the product map needs at least two generators");
  MultFragment m;
  m.ell = ell;
  m.generators = generators;
  for (const auto& g : generators) m.labels.push_back(g.to_string());
  ClassVectors cv = class_vectors(generators, ell);
  const auto& base = cv.base;
  size_t nb = base.size();
  size_t w = wedge_dim(n), wb = wedge_dim(nb);
  // Coordinates {b_k, b_l} that vanish by the Steinberg relation.
  std::vector<bool> steinberg(wb, false);
  for (size_t k = 0; k < wb; ++k) {
    auto [i, j] = wedge_pair(nb, k);
    steinberg[k] = (base[i] - base[j]).is_constant();
  }
  ModMatrix forced(wb, w, ell);
  for (size_t k = 0; k < w; ++k) {
    auto [i, j] = wedge_pair(n, k);
    Vec c = wb ? wedge(cv.vectors[i], cv.vectors[j], ell) : Vec{};
    for (size_t r = 0; r < wb; ++r) forced.at(r, k) = steinberg[r] ? 0 : c[r];
  }
  m.forced_kernel = Subspace::span(forced.kernel(), w, ell);

  // Residue functionals: a certifying chain for every product of two
  // generators and of two base elements.
  std::vector<Symbol> probes;
  for (size_t k = 0; k < w; ++k) {
    auto [i, j] = wedge_pair(n, k);
    probes.push_back(Symbol{{generators[i], generators[j]}});
  }
  for (size_t k = 0; k < wb; ++k) {
    auto [i, j] = wedge_pair(nb, k);
    if (!steinberg[k]) probes.push_back(Symbol{{RatFunc(base[i]), RatFunc(base[j])}});
  }
  std::map<std::string, size_t> seen;
  for (const auto& s : probes) {
    auto cert = certify_symbol(s, ell, node_limit);
    if (!cert) continue;
    std::string key = cert->chain.to_string();
    if (seen.count(key)) continue;
    seen[key] = m.chains.size();
    m.chains.push_back(cert->chain);
  }
  m.map = ModMatrix(m.chains.size(), w, ell);
  for (size_t c = 0; c < m.chains.size(); ++c)
    for (size_t k = 0; k < w; ++k) {
      auto [i, j] = wedge_pair(n, k);
      m.map.at(c, k) = tame_chain(Symbol{{generators[i], generators[j]}}, ell, m.chains[c]).scalar_value();
    }
  m.upper_kernel = Subspace::span(m.map.kernel(), w, ell);
  if (!m.upper_kernel.contains(m.forced_kernel))
    throw Mismatch("a forced relation has a nonzero residue");
  m.exact = m.upper_kernel.dim() == m.forced_kernel.dim();
  m.kernel = m.forced_kernel;
  return m;
}

MultFragment mult_fragment(const std::vector<RatFunc>& generators, uint32_t ell, size_t node_limit) {
  MultFragment m = mult_fragment_bounds(generators, ell, node_limit);
  if (!m.exact)
    throw DimUnknown("residues leave " + std::to_string(m.upper_kernel.dim() - m.forced_kernel.dim()) +
                     " kernel dimensions of the product map undecided");
  return m;
}

MultFragment mult_fragment_from_kernel(size_t n, const Subspace& kernel) {
  if (kernel.ambient_dim() != wedge_dim(n)) throw ConfigError("kernel must live in wedge^2");
  MultFragment m;
  m.ell = kernel.modulus();
  for (size_t i = 0; i < n; ++i) m.labels.push_back("v" + std::to_string(i + 1));
  // The map onto the quotient by the kernel.
  Subspace perp = kernel.perp();
  m.map = ModMatrix::from_rows(perp.basis(), wedge_dim(n), m.ell);
  m.forced_kernel = kernel;
  m.upper_kernel = kernel;
  m.kernel = kernel;
  m.exact = true;
  return m;
}

AbcGroup dual_group(const MultFragment& m) {
  return AbcGroup(m.dim(), m.kernel.perp(), m.ell);
}

DualityReport duality_report(const MultFragment& m, const AbcGroup& g) {
  if (g.rank() != m.dim() || g.ell() != m.ell) throw ConfigError("group and product map have different shapes");
  DualityReport rep;
  rep.r = commutator_form(g).kernel();
  rep.expected = m.kernel.perp();
  if (auto v = rep.r.witness_not_in(rep.expected)) {
    rep.witness = v;
    rep.witness_side = "in R only";
  } else if (auto u = rep.expected.witness_not_in(rep.r)) {
    rep.witness = u;
    rep.witness_side = "in annihilator only";
  }
  rep.upsilon_ok = verify_upsilon(g).ok;
  rep.pass = !rep.witness && rep.upsilon_ok;
  return rep;
}

DualityReport duality_check(const MultFragment& m, const AbcGroup& g) {
  DualityReport rep = duality_report(m, g);
  if (rep.pass) return rep;
  if (!rep.upsilon_ok) throw Mismatch("Upsilon fails the pairing identity");
  std::string v;
  for (uint32_t x : *rep.witness) v += (v.empty() ? "" : ",") + std::to_string(x);
  throw Mismatch("kernel of the commutator form differs from the annihilator of ker(mult); witness [" + v +
                 "] " + rep.witness_side);
}

Json to_json(const MultFragment& m) {
  Json j;
  j["ell"] = m.ell;
  j["labels"] = m.labels;
  Json chains = Json::array();
  for (const auto& c : m.chains) chains.push_back(to_json(c));
  j["chains"] = chains;
  j["map"] = m.map.row_list();
  j["forced_kernel"] = m.forced_kernel.basis();
  j["upper_kernel"] = m.upper_kernel.basis();
  j["kernel"] = m.kernel.basis();
  j["exact"] = m.exact;
  return j;
}

Json to_json(const DualityReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["R"] = r.r.basis();
  j["annihilator_of_kernel"] = r.expected.basis();
  j["upsilon_ok"] = r.upsilon_ok;
  if (r.witness) {
    j["witness"] = *r.witness;
    j["witness_side"] = r.witness_side;
  }
  return j;
}

MultFragment mult_fragment_from_json(const Json& j, const Tower& t, int num_vars) {
  try {
    uint32_t ell = j.value("ell", 3u);
    if (j.contains("generators")) {
      std::vector<RatFunc> gens;
      for (const auto& g : j.at("generators")) gens.push_back(rat_func_from_json(g, t, num_vars));
      return mult_fragment(gens, ell);
    }
    size_t n = j.at("n").get<size_t>();
    std::vector<Vec> rows = j.value("kernel", std::vector<Vec>{});
    for (const auto& r : rows)
      if (r.size() != wedge_dim(n)) throw ConfigError("kernel vector has the wrong length");
    return mult_fragment_from_kernel(n, Subspace::span(rows, wedge_dim(n), ell));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("product map JSON: ") + e.what());
  }
}

}  // namespace kmr
