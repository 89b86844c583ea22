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

#include "kmr/lattice/lattice_fragment.h"

#include <algorithm>
#include <map>

#include "kmr/errors.h"
#include "kmr/kmilnor/json_io.h"

namespace kmr {

std::vector<size_t> LatticeFragment::nodes_of_rank(int r) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].rank == r) out.push_back(i);
  return out;
}

int LatticeFragment::top_rank() const {
  int r = 0;
  for (const auto& n : nodes) r = std::max(r, n.rank);
  return r;
}

std::optional<size_t> LatticeFragment::join(Mask m) const {
  std::optional<size_t> best;
  bool ambiguous = false;
  for (size_t i = 0; i < nodes.size(); ++i) {
    if ((nodes[i].members & m) != m) continue;
    if (!best || nodes[i].rank < nodes[*best].rank) {
      best = i;
      ambiguous = false;
    } else if (nodes[i].rank == nodes[*best].rank) {
      ambiguous = true;
    }
  }
  if (ambiguous) return std::nullopt;
  return best;
}

size_t LatticeFragment::verify() const {
  size_t n = 0;
  for (const auto& node : nodes) {
    if (!node.record.lower.replay()) throw Mismatch("certificate of " + node.id + " does not replay");
    ++n;
    for (const auto& [z, c] : node.record.exclusions) {
      if (!c.replay()) throw Mismatch("exclusion of " + universe[z].label + " from " + node.id + " does not replay");
      ++n;
    }
  }
  for (const auto& e : edges)
    if ((nodes[e.lower].members & nodes[e.upper].members) != nodes[e.lower].members)
      throw Mismatch("edge " + nodes[e.lower].id + " -> " + nodes[e.upper].id + " is not a containment");
  return n;
}

LatticeFragment assemble_lattice(const std::vector<RationalSubgroup>& universe, uint32_t ell,
                                 std::vector<LatticeNode> nodes) {
  LatticeFragment L;
  L.universe = universe;
  L.ell = ell;
  std::sort(nodes.begin(), nodes.end(), [](const LatticeNode& a, const LatticeNode& b) {
    return a.rank != b.rank ? a.rank < b.rank : a.members < b.members;
  });
  std::vector<int> seen(8, 0);
  for (auto& n : nodes) {
    if (n.rank >= static_cast<int>(seen.size())) seen.resize(n.rank + 1, 0);
    n.id = "L" + std::to_string(n.rank) + "." + std::to_string(seen[n.rank]++);
  }
  L.nodes = std::move(nodes);
  for (size_t i = 0; i < L.nodes.size(); ++i)
    for (size_t j = 0; j < L.nodes.size(); ++j) {
      const auto& a = L.nodes[i];
      const auto& b = L.nodes[j];
      if (b.rank == a.rank + 1 && (a.members & b.members) == a.members) L.edges.push_back({i, j});
    }
  return L;
}

LatticeFragment build_lattice(const UniverseEngine& engine) {
  int R = engine.rank(engine.full());
  std::vector<LatticeNode> nodes;
  std::vector<FlatRecord> r2, r3;
  if (R >= 2) r2 = certified_flats(engine, 2);
  if (R >= 3) r3 = certified_flats(engine, 3);
  if (R >= 3)
    for (auto& p : recover_rank_1(engine, r2, r3)) nodes.push_back({"", 1, p.flat.members, p.flat, p.witness});
  for (auto& f : r2) nodes.push_back({"", 2, f.members, f, std::nullopt});
  for (auto& f : r3) nodes.push_back({"", 3, f.members, f, std::nullopt});
  for (int r = 4; r <= R; ++r)
    for (auto& f : certified_flats(engine, r)) nodes.push_back({"", r, f.members, f, std::nullopt});
  return assemble_lattice(engine.universe(), engine.options().ell, std::move(nodes));
}

std::string node_label(const LatticeFragment& L, size_t node) {
  std::string s = "{";
  bool first = true;
  for (size_t i : mask_indices(L.nodes[node].members)) {
    s += (first ? "" : ",") + L.universe[i].label;
    first = false;
  }
  return s + "}";
}

Json to_json(const RationalSubgroup& A) {
  return Json{{"label", A.label}, {"generator", A.generator.to_string()}};
}

RationalSubgroup rational_subgroup_from_json(const Json& j, const Tower& t, int num_vars) {
  RatFunc g = rat_func_from_json(j.at("generator"), t, num_vars);
  std::string label = j.contains("label") ? j.at("label").get<std::string>() : g.to_string();
  return rational_subgroup(label, g);
}

Json to_json(const SubgroupFragment& f) {
  Json gens = Json::array();
  for (const auto& g : f.generators) gens.push_back(g.to_string());
  return Json{{"label", f.label}, {"generators", gens}, {"closure_rank", f.closure_rank}};
}

Json to_json(const Distinction& d) {
  return Json{{"first_outside_second", d.first_outside_second},
              {"element", d.element},
              {"inner_basis", d.inner_basis},
              {"certificate", to_json(d.certificate)}};
}

Json to_json(const Divisor& d) {
  Json out = Json::array();
  for (const auto& [pt, c] : d)
    out.push_back(Json{{"point", pt.is_infinity() ? Json("inf") : to_json(*pt.a)}, {"coef", c}});
  return out;
}

Json to_json(const FlatRecord& f, const std::vector<RationalSubgroup>& universe) {
  Json members = Json::array();
  for (size_t i : mask_indices(f.members)) members.push_back(universe[i].label);
  Json ex = Json::array();
  for (const auto& [z, c] : f.exclusions) ex.push_back(Json{{"member", universe[z].label}, {"certificate", to_json(c)}});
  return Json{{"members", members}, {"rank", f.rank}, {"lower", to_json(f.lower)}, {"exclusions", ex}};
}

Json to_json(const LatticeFragment& L) {
  Json uni = Json::array();
  for (const auto& u : L.universe) uni.push_back(to_json(u));
  // Certificates are stored once and referenced by index from the nodes.
  Json certs = Json::array();
  std::map<std::string, size_t> cert_index;
  auto cert_ref = [&](const Certificate& c) {
    std::string key = c.statement.to_string() + "|" + c.chain.to_string() + "|" + std::to_string(c.trial);
    auto [it, fresh] = cert_index.emplace(key, certs.size());
    if (fresh) certs.push_back(to_json(c));
    return it->second;
  };
  Json nodes = Json::array();
  for (size_t i = 0; i < L.nodes.size(); ++i) {
    const auto& n = L.nodes[i];
    Json gens = Json::array();
    for (size_t k : mask_indices(n.members)) gens.push_back(L.universe[k].generator.to_string());
    Json members = Json::array();
    for (size_t k : mask_indices(n.record.members)) members.push_back(L.universe[k].label);
    Json ex = Json::array();
    for (const auto& [z, c] : n.record.exclusions)
      ex.push_back(Json{{"member", L.universe[z].label}, {"certificate", cert_ref(c)}});
    Json j{{"members", members}, {"rank", n.record.rank}, {"lower", cert_ref(n.record.lower)}, {"exclusions", ex}};
    j["id"] = n.id;
    j["generators"] = gens;
    if (n.witness) {
      auto lab = [&](Mask m) {
        Json a = Json::array();
        for (size_t k : mask_indices(m)) a.push_back(L.universe[k].label);
        return a;
      };
      const auto& w = *n.witness;
      j["witness"] = Json{{"B1", lab(w.b1)}, {"B2", lab(w.b2)}, {"C", lab(w.c)},   {"D", L.universe[w.d].label},
                          {"B1'", lab(w.b1p)}, {"B2'", lab(w.b2p)}, {"E", lab(w.e)}};
    }
    nodes.push_back(j);
  }
  Json edges = Json::array();
  for (const auto& e : L.edges)
    edges.push_back(Json{{"from", L.nodes[e.lower].id}, {"to", L.nodes[e.upper].id}, {"proof", "containment"}});
  return Json{{"version", 1},
              {"ell", L.ell},
              {"universe", uni},
              {"certificates", certs},
              {"maximality", "relative to the declared universe"},
              {"nodes", nodes},
              {"edges", edges}};
}

std::string to_dot(const LatticeFragment& L) {
  std::string s = "digraph lattice {\n  rankdir=BT;\n";
  for (size_t i = 0; i < L.nodes.size(); ++i)
    s += "  \"" + L.nodes[i].id + "\" [label=\"" + L.nodes[i].id + "\\n" + node_label(L, i) + "\"];\n";
  for (const auto& e : L.edges) s += "  \"" + L.nodes[e.lower].id + "\" -> \"" + L.nodes[e.upper].id + "\";\n";
  return s + "}\n";
}

Json to_json(const DeltaSet& d) {
  Json entries = Json::array();
  for (const auto& e : d.entries)
    entries.push_back(Json{{"valuation", to_json(e.v)},
                           {"point", e.point.is_infinity() ? Json("inf") : to_json(*e.point.a)},
                           {"multiplicity", e.multiplicity},
                           {"subgroup", "members of " + d.base.label + " with divisor coefficient 0 at " +
                                            e.point.to_string()}});
  Json skipped = Json::array();
  for (const auto& v : d.skipped) skipped.push_back(to_json(v));
  return Json{{"base", to_json(d.base)}, {"ell", d.ell}, {"entries", entries}, {"skipped", skipped}};
}

Json to_json(const RigidityModel& m) {
  Json frags = Json::array();
  for (const auto& f : m.fragments)
    frags.push_back(Json{{"label", f.label}, {"members", f.members}, {"points", f.points}, {"divisors", f.divisors}});
  return Json{{"ell", m.ell}, {"dim", m.dim}, {"basis", m.basis_labels}, {"fragments", frags}};
}

RigidityModel rigidity_model_from_json(const Json& j) {
  RigidityModel m;
  m.ell = j.at("ell").get<uint32_t>();
  m.dim = j.at("dim").get<size_t>();
  if (j.contains("basis")) m.basis_labels = j.at("basis").get<std::vector<std::string>>();
  for (const auto& f : j.at("fragments")) {
    RigidityFragment r;
    r.label = f.at("label").get<std::string>();
    r.members = f.at("members").get<std::vector<Vec>>();
    r.points = f.at("points").get<std::vector<std::string>>();
    r.divisors = f.at("divisors").get<std::vector<Vec>>();
    for (auto& v : r.members)
      if (v.size() != m.dim) throw ConfigError(r.label + ": member of the wrong length");
    for (auto& v : r.divisors)
      if (v.size() != r.points.size()) throw ConfigError(r.label + ": divisor of the wrong length");
    m.fragments.push_back(r);
  }
  return m;
}

Json to_json(const RigidityResult& r) {
  Json j{{"fragment_epsilon", r.fragment_epsilon}, {"components", r.components}, {"spans_ambient", r.spans_ambient}};
  if (r.epsilon) j["epsilon"] = *r.epsilon;
  if (r.report)
    j["counterexample"] = Json{{"kind", r.report->kind},         {"message", r.report->message},
                               {"fragments", r.report->fragments}, {"points", r.report->points},
                               {"scalars", r.report->scalars},     {"witness", r.report->witness}};
  return j;
}

Json to_json(const VeryGeneralResult& r) {
  Json rej = Json::array();
  for (const auto& v : r.rejected_by) rej.push_back(to_json(v));
  return Json{{"a", to_json(r.a)}, {"b", to_json(r.b)}, {"z", r.z.to_string()}, {"trial", r.trial}, {"rejected_by", rej}};
}

}  // namespace kmr
