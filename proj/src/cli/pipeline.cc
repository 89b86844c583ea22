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

#include "kmr/cli/pipeline.h"

#include <algorithm>
#include <numeric>

#include "kmr/errors.h"
#include "kmr/geometry/from_lattice.h"
#include "kmr/geometry/isomorphism.h"
#include "kmr/groundfield/expr.h"
#include "kmr/lattice/delta.h"
#include "kmr/lattice/engine.h"

namespace kmr {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<RationalSubgroup> to_subgroups(const std::vector<SubgroupDecl>& decls, const Tower& t, int vars) {
  std::vector<RationalSubgroup> out;
  for (const auto& d : decls) out.push_back(rational_subgroup(d.label, parse_ratfunc(d.generator, t, vars)));
  return out;
}

}  // namespace

void PipelineConfig::validate(int min_vars) const {
  if (!is_prime(p)) throw ConfigError("p must be prime");
  if (!is_prime(ell)) throw ConfigError("ell must be prime");
  if (p == ell) throw ConfigError("ell must differ from p");
  if (vars < min_vars) throw ConfigError("at least " + std::to_string(min_vars) + " variables required");
  if (vars > 16) throw ConfigError("at most 16 variables supported");
}

SubgroupDecl parse_decl(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos) return {s, s};
  return {s.substr(0, eq), s.substr(eq + 1)};
}

PipelineConfig pipeline_config_from_json(const Json& j, PipelineConfig c) {
  try {
    c.p = j.value("p", c.p);
    c.ell = j.value("ell", c.ell);
    c.vars = j.value("vars", c.vars);
    c.budget = j.value("budget", c.budget);
    c.seed = j.value("seed", c.seed);
    c.workers = j.value("workers", c.workers);
    c.verify = j.value("verify", c.verify);
    if (j.contains("universe")) {
      c.universe.clear();
      for (const auto& u : j.at("universe")) {
        if (u.is_string()) {
          c.universe.push_back(parse_decl(u.get<std::string>()));
        } else {
          std::string g = u.at("generator").is_string() ? u.at("generator").get<std::string>() : u.at("generator").dump();
          c.universe.push_back({u.value("label", g), g});
        }
      }
    }
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("pipeline config: ") + e.what());
  }
}

Json to_json(const PipelineConfig& c) {
  return Json{{"p", c.p}, {"ell", c.ell}, {"vars", c.vars}, {"budget", c.budget}, {"verify", c.verify}};
}

std::vector<SubgroupDecl> default_universe(uint32_t p, uint32_t ell, int vars) {
  const Tower& t = Tower::get(p);
  std::vector<SubgroupDecl> out;
  std::vector<CoordValuation> ambient;
  for (int v = 0; v < vars; ++v) {
    ambient.push_back(coord_valuation(v, GroundElem::zero(t)));
    ambient.push_back(coord_valuation(v, GroundElem::from_int(t, -1)));
    ambient.push_back(coord_valuation_at_infinity(v));
  }
  for (int v = 0; v < vars; ++v) {
    std::string x = "t" + std::to_string(v + 1);
    out.push_back({x, x});
  }
  for (int v = 0; v < vars; ++v) {
    RatFunc x = RatFunc::variable(t, vars, v), y = RatFunc::variable(t, vars, (v + 1) % vars);
    auto r = very_general_search(x, y, 20, ambient, ell);
    if (!r) throw DimUnknown("no very general element found for t" + std::to_string(v + 1));
    std::string s = r->z.to_string();
    out.push_back({s, s});
  }
  return out;
}

std::vector<RationalSubgroup> build_universe(const PipelineConfig& c) {
  const Tower& t = Tower::get(c.p);
  auto decls = c.universe.empty() ? default_universe(c.p, c.ell, c.vars) : c.universe;
  return to_subgroups(decls, t, c.vars);
}

PipelineResult run_pipeline(const PipelineConfig& c) {
  c.validate(5);
  return run_pipeline(c, build_universe(c));
}

PipelineResult run_pipeline(const PipelineConfig& c, std::vector<RationalSubgroup> universe) {
  c.validate(5);
  if (universe.size() < 2) throw InsufficientUniverse("the universe needs at least two rational subgroups");
  PipelineResult r;
  r.universe = universe;
  // Step 1.
  std::vector<RatFunc> gens;
  for (const auto& a : universe) gens.push_back(a.generator);
  r.kring = mult_fragment_bounds(gens, c.ell);
  // Step 2.
  CertOptions opt;
  opt.ell = c.ell;
  opt.budget = c.budget;
  opt.seed = c.seed;
  opt.workers = c.workers;
  UniverseEngine engine(universe, opt);
  r.lattice = build_lattice(engine);
  r.certificate_calls = engine.certificate_calls();
  if (c.verify) r.verified_certificates = r.lattice.verify();
  // Step 3.
  GradedLatticeView view = lattice_view(r.lattice);
  if (view.num_points() < 2)
    throw InsufficientUniverse("only " + std::to_string(view.num_points()) + " points recovered");
  r.geometry = c_construction(view);
  // Step 4. Sampling (above 12 points) uses a fixed seed so the report does
  // not depend on the run seed.
  r.axioms = check_axioms(r.geometry, AxiomOptions{12, 4000, 0});
  return r;
}

Json pipeline_json(const PipelineResult& r, const PipelineConfig& c) {
  Json kring = to_json(r.kring);
  Json report;
  report["points"] = r.geometry.size();
  report["nodes"] = r.lattice.nodes.size();
  report["edges"] = r.lattice.edges.size();
  report["top_rank"] = r.lattice.top_rank();
  report["kring_exact"] = r.kring.exact;
  report["kring_relations"] = r.kring.kernel.dim();
  report["axioms"] = to_json(r.axioms, r.geometry);
  if (c.verify) report["verified_certificates"] = r.verified_certificates;
  Json out;
  out["version"] = 1;
  out["config"] = to_json(c);
  out["kring_fragment"] = kring;
  out["lattice_fragment"] = to_json(r.lattice);
  out["geometry"] = geometry_to_json(r.geometry, std::max(1, r.lattice.top_rank()));
  out["report"] = report;
  return out;
}

namespace {

// The index k with cls in the line spanned by targets[k].
std::optional<size_t> match_line(const Vec& cls, const std::vector<Vec>& targets, uint32_t ell) {
  std::optional<size_t> found;
  for (size_t k = 0; k < targets.size(); ++k) {
    if (vec_is_zero(targets[k])) continue;
    Subspace line = Subspace::span({targets[k]}, cls.size(), ell);
    if (!line.contains(cls)) continue;
    if (found) throw TransferMismatch("two permuted subgroups share the class line of " + std::to_string(k));
    found = k;
  }
  return found;
}

std::string join_labels(const std::vector<std::string>& labels, const std::vector<size_t>& idx) {
  std::string s;
  for (size_t i : idx) s += (s.empty() ? "" : ",") + labels[i];
  return s;
}

}  // namespace

RoundtripReport run_roundtrip(const PipelineConfig& c, const std::vector<int>& perm, uint32_t epsilon) {
  c.validate(5);
  if (perm.size() != size_t(c.vars)) throw ConfigError("the permutation must act on all variables");
  std::vector<int> check = perm;
  std::sort(check.begin(), check.end());
  for (int i = 0; i < c.vars; ++i)
    if (check[i] != i) throw ConfigError("not a permutation of the variables");
  if (epsilon % c.ell == 0) throw ConfigError("epsilon must be a unit mod ell");

  const Tower& t = Tower::get(c.p);
  std::vector<RationalSubgroup> U = build_universe(c);
  std::vector<RatFunc> images;
  for (int i = 0; i < c.vars; ++i) images.push_back(RatFunc::variable(t, c.vars, perm[i]));
  std::vector<RatFunc> moved;
  for (const auto& a : U) moved.push_back(a.generator.compose(images));

  // The permuted universe keeps the original order when it is the same set
  // of subgroups, and is sorted by generator otherwise.
  std::vector<RatFunc> all;
  for (const auto& a : U) all.push_back(a.generator);
  for (const auto& m : moved) all.push_back(m);
  for (const auto& m : moved) all.push_back(m.pow(epsilon));
  ClassVectors cv = class_vectors(all, c.ell);
  size_t n = U.size();
  std::vector<Vec> orig(cv.vectors.begin(), cv.vectors.begin() + n);
  for (const Vec& v : orig)
    if (vec_is_zero(v)) throw ConfigError("a declared generator has trivial class");
  bool stable = true;
  for (size_t j = 0; j < n && stable; ++j) stable = match_line(cv.vectors[n + j], orig, c.ell).has_value();
  std::vector<RationalSubgroup> U2;
  std::vector<Vec> targets;
  if (stable) {
    U2 = U;
    targets = orig;
  } else {
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return moved[a].to_string() < moved[b].to_string(); });
    for (size_t j : order) {
      U2.push_back(rational_subgroup(moved[j].to_string(), moved[j]));
      targets.push_back(cv.vectors[n + j]);
    }
  }

  RoundtripReport rep;
  rep.permutation = perm;
  rep.epsilon = epsilon % c.ell;
  for (size_t j = 0; j < n; ++j) {
    auto k = match_line(cv.vectors[2 * n + j], targets, c.ell);
    if (!k) throw TransferMismatch("the image of " + U[j].label + " is not a declared subgroup");
    rep.index_map.push_back(*k);
  }

  PipelineResult r1 = run_pipeline(c, U);
  PipelineResult r2 = stable ? r1 : run_pipeline(c, U2);
  const LatticeFragment& L1 = r1.lattice;
  const LatticeFragment& L2 = r2.lattice;
  auto image_mask = [&](Mask m) {
    Mask out = 0;
    for (size_t i : mask_indices(m)) out |= Mask{1} << rep.index_map[i];
    return out;
  };
  auto node_with = [&](const LatticeFragment& L, Mask m) -> std::optional<size_t> {
    for (size_t i = 0; i < L.nodes.size(); ++i)
      if (L.nodes[i].members == m) return i;
    return std::nullopt;
  };
  std::vector<size_t> nodemap;
  for (size_t i = 0; i < L1.nodes.size(); ++i) {
    auto k = node_with(L2, image_mask(L1.nodes[i].members));
    if (!k) throw TransferMismatch("node " + L1.nodes[i].id + " " + node_label(L1, i) + " has no image");
    nodemap.push_back(*k);
  }
  GradedLatticeView v1 = lattice_view(L1), v2 = lattice_view(L2);
  try {
    rep.point_map = transfer_isomorphism(v1, v2, nodemap);
  } catch (const NotIsomorphism& e) {
    throw TransferMismatch(std::string("lattice transfer failed: ") + e.what());
  }
  // Direct recomputation from the member sets of the points.
  for (size_t p = 0; p < v1.num_points(); ++p) {
    Mask want = image_mask(L1.nodes[v1.point_node[p]].members);
    std::optional<size_t> q;
    for (size_t k = 0; k < v2.num_points(); ++k)
      if (L2.nodes[v2.point_node[k]].members == want) q = k;
    if (!q) throw TransferMismatch("point " + v1.point_labels[p] + " has no image");
    rep.expected_point_map.push_back(*q);
  }
  if (rep.point_map != rep.expected_point_map) {
    for (size_t p = 0; p < rep.point_map.size(); ++p)
      if (rep.point_map[p] != rep.expected_point_map[p])
        throw TransferMismatch("point " + v1.point_labels[p] + " goes to " + v2.point_labels[rep.point_map[p]] +
                               " instead of " + v2.point_labels[rep.expected_point_map[p]]);
  }
  IsoCheck iso = check_isomorphism(r1.geometry, r2.geometry, rep.point_map);
  if (!iso.ok)
    throw TransferMismatch("closure not preserved on {" + join_labels(r1.geometry.labels(), point_list(iso.witness)) + "}");
  rep.isomorphism_exhaustive = iso.exhaustive;
  rep.identity = true;
  for (size_t p = 0; p < rep.point_map.size(); ++p) {
    const std::string& a = r1.geometry.labels()[p];
    const std::string& b = r2.geometry.labels()[rep.point_map[p]];
    if (a != b) {
      rep.identity = false;
      rep.moved.emplace_back(a, b);
    }
  }
  return rep;
}

Json to_json(const RoundtripReport& r) {
  Json moved = Json::array();
  for (const auto& [a, b] : r.moved) moved.push_back(Json{{"from", a}, {"to", b}});
  return Json{{"permutation", r.permutation},
              {"epsilon", r.epsilon},
              {"index_map", r.index_map},
              {"point_map", r.point_map},
              {"expected_point_map", r.expected_point_map},
              {"identity", r.identity},
              {"isomorphism_exhaustive", r.isomorphism_exhaustive},
              {"moved", moved}};
}

}  // namespace kmr
