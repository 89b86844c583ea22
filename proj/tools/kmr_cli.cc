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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "kmr/abc/cohomology.h"
#include "kmr/abc/duality.h"
#include "kmr/abc/group.h"
#include "kmr/abc/kummer.h"
#include "kmr/cli/pipeline.h"
#include "kmr/errors.h"
#include "kmr/geometry/axioms.h"
#include "kmr/geometry/lcl.h"
#include "kmr/groundfield/expr.h"
#include "kmr/kmilnor/dimension.h"
#include "kmr/kmilnor/json_io.h"
#include "kmr/lattice/engine.h"

using namespace kmr;

namespace {

struct Globals {
  uint32_t p = 7;
  uint32_t ell = 3;
  int vars = 5;
  size_t budget = 50;
  uint64_t seed = 0;
  unsigned workers = 1;
  std::string out;
  bool verify = false;
};

Globals G;

const Tower& tower() { return Tower::get(G.p); }

void check_globals(int min_vars) {
  PipelineConfig c;
  c.p = G.p;
  c.ell = G.ell;
  c.vars = G.vars;
  c.validate(min_vars);
}

CertOptions cert_options() {
  CertOptions o;
  o.ell = G.ell;
  o.budget = G.budget;
  o.seed = G.seed;
  o.workers = G.workers;
  return o;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void emit(const std::string& text) {
  if (G.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(G.out);
  if (!f) throw ConfigError("cannot write " + G.out);
  f << text;
}

void emit(const Json& j) { emit(j.dump() + "\n"); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<RatFunc> parse_all(const std::vector<std::string>& exprs) {
  std::vector<RatFunc> out;
  for (const auto& e : exprs) out.push_back(parse_ratfunc(e, tower(), G.vars));
  return out;
}

int parse_var(const std::string& s) {
  if (s.size() < 2 || s[0] != 't') throw ParseError("expected a coordinate t1..td, got " + s);
  int v = std::stoi(s.substr(1)) - 1;
  if (v < 0 || v >= G.vars) throw ParseError("coordinate out of range: " + s);
  return v;
}

// "t1=0" or "t2=inf"; the center is a constant expression.
std::pair<int, std::optional<GroundElem>> parse_place(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos) throw ParseError("expected t_i=center, got " + s);
  int v = parse_var(s.substr(0, eq));
  std::string c = s.substr(eq + 1);
  if (c == "inf") return {v, std::nullopt};
  RatFunc f = parse_ratfunc(c, tower(), G.vars);
  if (!f.is_constant()) throw ParseError("center must be a constant: " + c);
  return {v, f.constant_value()};
}

ParshinChain parse_chain(const std::string& s) {
  std::vector<int> vars;
  std::vector<std::optional<GroundElem>> centers;
  for (const auto& step : split(s, ',')) {
    auto [v, c] = parse_place(step);
    vars.push_back(v);
    centers.push_back(c);
  }
  return coordinate_chain(tower(), G.vars, vars, centers);
}

std::vector<CoordValuation> default_ambient() {
  std::vector<CoordValuation> out;
  for (int v = 0; v < G.vars; ++v) {
    out.push_back(coord_valuation(v, GroundElem::zero(tower())));
    out.push_back(coord_valuation(v, GroundElem::from_int(tower(), -1)));
    out.push_back(coord_valuation_at_infinity(v));
  }
  return out;
}

PipelineConfig config_from(const std::string& in, const std::vector<std::string>& decls) {
  PipelineConfig c;
  c.p = G.p;
  c.ell = G.ell;
  c.vars = G.vars;
  c.budget = G.budget;
  c.seed = G.seed;
  c.workers = G.workers;
  c.verify = G.verify;
  if (!in.empty()) c = pipeline_config_from_json(read_json(in), c);
  for (const auto& d : decls) c.universe.push_back(parse_decl(d));
  G.p = c.p;
  G.ell = c.ell;
  G.vars = c.vars;
  return c;
}

ModMatrix matrix_from_json(const Json& j, size_t n, uint32_t ell) {
  std::vector<Vec> rows;
  try {
    for (const auto& r : j) {
      Vec v;
      for (const auto& x : r) v.push_back(static_cast<uint32_t>(mod_reduce(x.get<int64_t>(), ell)));
      if (v.size() != n) throw ConfigError("matrix rows must have length " + std::to_string(n));
      rows.push_back(v);
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
  if (rows.size() != n) throw ConfigError("matrix must be square of size " + std::to_string(n));
  return ModMatrix::from_rows(rows, n, ell);
}

Json labels_of(Mask m, const std::vector<RationalSubgroup>& u) {
  Json out = Json::array();
  for (size_t i : mask_indices(m)) out.push_back(u[i].label);
  return out;
}

int exit_code(const Error& e) {
  const std::string& k = e.kind();
  if (k == "DimUnknown") return 2;
  if (k == "Mismatch" || k == "NotCompatible" || k == "TransferMismatch" || k == "NotPreserving" ||
      k == "NotIsomorphism")
    return 3;
  return 1;
}

// Subcommands. Each returns the exit code.

int cmd_symbol_eval(const std::vector<std::string>& entries, const std::string& chain_text) {
  check_globals(2);
  Symbol s{parse_all(entries)};
  ParshinChain c = parse_chain(chain_text);
  FormalSymbol r = tame_chain(s, G.ell, c);
  Truth z = r.is_zero();
  Json j;
  j["symbol"] = to_json(s);
  j["chain"] = to_json(c);
  j["residue"] = to_json(r);
  j["zero"] = to_string(z);
  if (r.degree() == 0) j["value"] = r.scalar_value();
  emit(j);
  return z == Truth::Unknown ? 2 : 0;
}

int cmd_certify(const std::vector<std::string>& entries) {
  check_globals(2);
  auto cert = certificate_search(parse_all(entries), cert_options());
  if (!cert) {
    emit(Json{{"certified", false}, {"trials", G.budget}});
    return 2;
  }
  Json j{{"certified", true}, {"certificate", to_json(*cert)}};
  if (G.verify) j["replayed"] = cert->replay();
  emit(j);
  return G.verify && !cert->replay() ? 3 : 0;
}

int cmd_dim(const std::vector<std::string>& entries, int trdeg, bool generated) {
  check_globals(2);
  if (trdeg < 0) trdeg = G.vars;
  DimBounds b = milnor_dim_bounds(parse_all(entries), trdeg, cert_options(),
                                  generated ? DimMode::Generated : DimMode::Rational);
  Json j{{"lower", b.lower}, {"upper", b.upper}, {"exact", b.exact()}, {"upper_reason", b.upper_reason}};
  if (b.witness) j["witness"] = to_json(*b.witness);
  emit(j);
  return b.exact() ? 0 : 2;
}

int cmd_lattice_build(const PipelineConfig& c, bool dot) {
  c.validate(4);
  UniverseEngine engine(build_universe(c), cert_options());
  LatticeFragment L = build_lattice(engine);
  if (G.verify) std::cerr << "replayed " << L.verify() << " certificates\n";
  if (dot)
    emit(to_dot(L));
  else
    emit(to_json(L));
  return 0;
}

int cmd_lattice_reconstruct(const PipelineConfig& c, int rank) {
  c.validate(rank == 1 ? 4 : 2);
  UniverseEngine engine(build_universe(c), cert_options());
  const auto& u = engine.universe();
  Json out = Json::array();
  if (rank >= 2) {
    for (const auto& f : recover_rank_r(engine, rank)) out.push_back(to_json(f, u));
  } else {
    auto r2 = recover_rank_r(engine, 2);
    auto r3 = recover_rank_r(engine, 3);
    for (const auto& pt : recover_rank_1(engine, r2, r3)) {
      const PointWitness& w = pt.witness;
      out.push_back(Json{{"flat", to_json(pt.flat, u)},
                         {"witness",
                          {{"b1", labels_of(w.b1, u)},
                           {"b2", labels_of(w.b2, u)},
                           {"c", labels_of(w.c, u)},
                           {"b1p", labels_of(w.b1p, u)},
                           {"b2p", labels_of(w.b2p, u)},
                           {"e", labels_of(w.e, u)},
                           {"d", u[w.d].label}}}});
    }
  }
  emit(Json{{"rank", rank}, {"flats", out}});
  return 0;
}

int cmd_delta(const std::vector<std::string>& exprs, const std::vector<std::string>& ambient_text) {
  check_globals(2);
  std::vector<CoordValuation> ambient;
  for (const auto& a : ambient_text) {
    auto [v, c] = parse_place(a);
    ambient.push_back(c ? coord_valuation(v, *c) : coord_valuation_at_infinity(v));
  }
  if (ambient.empty()) ambient = default_ambient();
  std::vector<RatFunc> fs = parse_all(exprs);
  if (fs.size() == 1) {
    emit(to_json(delta_set(rational_subgroup(exprs[0], fs[0]), ambient, G.ell)));
    return 0;
  }
  if (fs.size() != 2) throw ConfigError("delta takes a generator, or x and y for a very general search");
  auto r = very_general_search(fs[0], fs[1], G.budget, ambient, G.ell, G.seed);
  if (!r) {
    emit(Json{{"found", false}, {"trials", G.budget}});
    return 2;
  }
  emit(Json{{"found", true},
            {"result", to_json(*r)},
            {"delta", to_json(delta_set(rational_subgroup(r->z.to_string(), r->z), ambient, G.ell))}});
  return 0;
}

int cmd_rigidity(const std::string& in, std::optional<uint32_t> scalar) {
  Json j = read_json(in);
  RigidityModel m;
  if (j.contains("subgroups")) {
    // Field data: rational subgroups and the centers kept for each.
    std::vector<RationalSubgroup> subs;
    for (const auto& s : j.at("subgroups")) subs.push_back(rational_subgroup_from_json(s, tower(), G.vars));
    std::vector<std::vector<GroundElem>> pts;
    for (const auto& row : j.at("points")) {
      pts.emplace_back();
      for (const auto& x : row) pts.back().push_back(ground_elem_from_json(x, tower()));
    }
    m = rigidity_model(subs, pts, G.ell);
  } else {
    m = rigidity_model_from_json(j.contains("model") ? j.at("model") : j);
  }
  ModMatrix phi;
  if (scalar)
    phi = ModMatrix::identity(m.dim, m.ell).scaled(*scalar % m.ell);
  else if (j.contains("phi"))
    phi = matrix_from_json(j.at("phi"), m.dim, m.ell);
  else
    throw ConfigError("rigidity needs a phi matrix or --scalar");
  RigidityResult r = epsilon_rigidity_check(phi, m);
  emit(to_json(r));
  return r.epsilon ? 0 : 3;
}

int cmd_geometry_check(const std::string& in, size_t limit, size_t samples) {
  ClosureGeometry g = geometry_from_json(read_json(in));
  AxiomReport r = check_axioms(g, AxiomOptions{limit, samples, G.seed});
  emit(to_json(r, g));
  return r.all_pass() ? 0 : 3;
}

int cmd_lcl_eval(const std::string& in, const std::string& formula, const std::vector<std::string>& params,
                 const std::vector<std::string>& vars) {
  ClosureGeometry g = geometry_from_json(read_json(in));
  LclFormula f = parse_lcl(formula);
  std::map<std::string, size_t> env;
  for (const auto& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=point, got " + p);
    env[p.substr(0, eq)] = g.index_of(p.substr(eq + 1));
  }
  LclResult r = vars.empty() ? eval_lcl(g, f, env) : eval_lcl(g, f, env, vars);
  Json tuples = Json::array();
  for (const auto& t : r.tuples) {
    Json row = Json::array();
    for (size_t i : t) row.push_back(g.labels()[i]);
    tuples.push_back(row);
  }
  emit(Json{{"formula", f.to_string()}, {"vars", r.vars}, {"tuples", tuples}, {"count", r.tuples.size()}});
  return 0;
}

int cmd_abc_verify(const std::string& in, const std::vector<std::string>& words, int h2n) {
  Json out;
  int code = 0;
  if (!in.empty()) {
    AbcGroup g = abc_group_from_json(read_json(in));
    CommutatorForm cf = commutator_form(g);
    UpsilonCheck u = verify_upsilon(g);
    out["group"] = to_json(g);
    out["commutator_kernel"] = cf.kernel().basis();
    out["upsilon"] = Json{{"matrix", upsilon(g).row_list()}, {"ok", u.ok}, {"checked", u.checked}};
    if (!u.ok) {
      out["upsilon"]["witness"] = Json{{"f", u.f}, {"s", u.s}, {"t", u.t}};
      code = 3;
    }
    Json nf = Json::object();
    for (const auto& w : words) nf[w] = to_json(word_normal_form(w, g));
    out["words"] = nf;
  }
  if (h2n > 0) {
    H2Result h = h2_brute_force(size_t(h2n), G.ell);
    H2Presentation pr = h2_presentation(size_t(h2n), G.ell);
    Json hj = to_json(h);
    hj.erase("basis");
    out["h2"] = hj;
    out["presentation"] = to_json(pr);
    if (!pr.surjective() || !pr.kernel_matches()) code = 3;
  }
  if (out.is_null()) throw ConfigError("abc-verify needs --in or --h2");
  emit(out);
  return code;
}

int cmd_duality_check(const std::string& in, const std::string& group_in) {
  MultFragment m = mult_fragment_from_json(read_json(in), tower(), G.vars);
  AbcGroup g = group_in.empty() ? dual_group(m) : abc_group_from_json(read_json(group_in));
  DualityReport r = duality_report(m, g);
  emit(Json{{"fragment", to_json(m)}, {"group", to_json(g)}, {"report", to_json(r)}});
  return r.pass ? 0 : 3;
}

int cmd_kummer(const std::string& in, bool back) {
  Json j = read_json(in);
  KummerFragment k = kummer_fragment_from_json(j.at("k"));
  KummerFragment l = kummer_fragment_from_json(j.at("l"));
  if (back) {
    ModMatrix phi = kummer_back(matrix_from_json(j.at("psi"), k.dim, k.ell), k, l);
    emit(Json{{"phi", phi.row_list()}});
    return 0;
  }
  KummerMap m = kummer_bridge(matrix_from_json(j.at("phi"), k.dim, k.ell), k, l);
  emit(to_json(m));
  return 0;
}

int cmd_pipeline(const PipelineConfig& c) {
  PipelineResult r = run_pipeline(c);
  emit(pipeline_json(r, c));
  return r.axioms.all_pass() ? 0 : 3;
}

int cmd_roundtrip(const PipelineConfig& c, const std::string& perm_text, uint32_t epsilon) {
  std::vector<int> perm;
  if (perm_text.empty()) {
    for (int i = 0; i < c.vars; ++i) perm.push_back(i);
  } else {
    for (const auto& s : split(perm_text, ',')) perm.push_back(std::stoi(s) - 1);
  }
  emit(to_json(run_roundtrip(c, perm, epsilon)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruction of function fields from mod-ell Milnor K-theory fragments"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--p", G.p, "Characteristic of the ground field");
  app.add_option("--ell", G.ell, "Prime ell, different from p");
  app.add_option("--vars", G.vars, "Number of coordinates t1..td");
  app.add_option("--budget", G.budget, "Trials for certificate and element searches");
  app.add_option("--seed", G.seed, "Seed for randomized searches");
  app.add_option("--workers", G.workers, "Worker threads");
  app.add_option("--out", G.out, "Output file (default stdout)");
  app.add_flag("--verify", G.verify, "Replay certificates");

  std::function<int()> run;
  std::vector<std::string> pos;
  std::vector<std::string> list1, list2;
  std::string in, text, group_in;
  int num = -1;
  bool flag = false;
  uint32_t epsilon = 1;
  std::optional<uint32_t> scalar;
  size_t limit = 12, samples = 4000;

  auto* se = app.add_subcommand("symbol-eval", "Tame residues of a symbol along a coordinate chain");
  se->add_option("entries", pos, "Symbol entries")->required();
  se->add_option("--chain", text, "Chain, e.g. t2=0,t1=inf")->required();
  se->callback([&] { run = [&] { return cmd_symbol_eval(pos, text); }; });

  auto* ce = app.add_subcommand("certify", "Search a certificate that a symbol is nonzero");
  ce->add_option("entries", pos, "Symbol entries")->required();
  ce->callback([&] { run = [&] { return cmd_certify(pos); }; });

  auto* di = app.add_subcommand("dim", "Bounds on the Milnor dimension of a set of elements");
  di->add_option("entries", pos, "Elements")->required();
  di->add_option("--trdeg", num, "Transcendence degree bound (default: vars)");
  di->add_flag("--generated", flag, "Use the subgroup generated by the elements");
  di->callback([&] { run = [&] { return cmd_dim(pos, num, flag); }; });

  auto* lb = app.add_subcommand("lattice-build", "Lattice fragment over a universe");
  lb->add_option("universe", pos, "Subgroups as expr or label=expr (default: coordinates and very general elements)");
  lb->add_option("--in", in, "Config JSON");
  lb->add_flag("--dot", flag, "Write DOT instead of JSON");
  lb->callback([&] { run = [&] { return cmd_lattice_build(config_from(in, pos), flag); }; });

  auto* lr = app.add_subcommand("lattice-reconstruct", "Recovered flats of one rank with their records");
  lr->add_option("universe", pos, "Subgroups as expr or label=expr");
  lr->add_option("--in", in, "Config JSON");
  lr->add_option("--rank", num, "Rank (1 for points)")->required();
  lr->callback([&] { run = [&] { return cmd_lattice_reconstruct(config_from(in, pos), num); }; });

  auto* de = app.add_subcommand("delta", "Delta set of a rational subgroup, or a very general search for x, y");
  de->add_option("exprs", pos, "Generator, or x and y")->required();
  de->add_option("--ambient", list1, "Ambient valuations t_i=center (default: 0, -1, inf on every coordinate)");
  de->callback([&] { run = [&] { return cmd_delta(pos, list1); }; });

  auto* ri = app.add_subcommand("rigidity", "Epsilon-rigidity of a map on a declared model");
  ri->add_option("--in", in, "JSON with model and phi")->required();
  ri->add_option("--scalar", scalar, "Use the scalar map instead of phi");
  ri->callback([&] { run = [&] { return cmd_rigidity(in, scalar); }; });

  auto* gc = app.add_subcommand("geometry-check", "Closure, geometry and exchange axioms");
  gc->add_option("--in", in, "Geometry JSON")->required();
  gc->add_option("--exhaustive-limit", limit, "Exhaustive up to this many points");
  gc->add_option("--samples", samples, "Random subsets above the limit");
  gc->callback([&] { run = [&] { return cmd_geometry_check(in, limit, samples); }; });

  auto* le = app.add_subcommand("lcl-eval", "Evaluate a formula of the closure language");
  le->add_option("--in", in, "Geometry JSON")->required();
  le->add_option("formula", text, "Formula")->required();
  le->add_option("--param", list1, "Parameter name=point");
  le->add_option("--var", list2, "Output variable order");
  le->callback([&] { run = [&] { return cmd_lcl_eval(in, text, list1, list2); }; });

  auto* av = app.add_subcommand("abc-verify", "Commutator form, Upsilon and H2 checks");
  av->add_option("--in", in, "Group JSON");
  av->add_option("--word", list1, "Word to normalize, e.g. \"x1 x2 x1^-1\"");
  av->add_option("--h2", num, "Brute-force H2 of (Z/ell)^n");
  av->callback([&] { run = [&] { return cmd_abc_verify(in, list1, num); }; });

  auto* dc = app.add_subcommand("duality-check", "Commutator kernel against the k^M_2 relations");
  dc->add_option("--in", in, "Fragment JSON")->required();
  dc->add_option("--group", group_in, "Group JSON (default: the dual group)");
  dc->callback([&] { run = [&] { return cmd_duality_check(in, group_in); }; });

  auto* ku = app.add_subcommand("kummer", "Transport a fragment map to the Galois side");
  ku->add_option("--in", in, "JSON with fragments k, l and phi (or psi with --back)")->required();
  ku->add_flag("--back", flag, "Recover phi from psi");
  ku->callback([&] { run = [&] { return cmd_kummer(in, flag); }; });

  auto* pi = app.add_subcommand("pipeline", "Fragment, lattice, geometry and axiom report");
  pi->add_option("universe", pos, "Subgroups as expr or label=expr");
  pi->add_option("--in", in, "Config JSON");
  pi->callback([&] { run = [&] { return cmd_pipeline(config_from(in, pos)); }; });

  auto* rt = app.add_subcommand("roundtrip", "Compare the pipeline on permuted data");
  rt->add_option("universe", pos, "Subgroups as expr or label=expr");
  rt->add_option("--in", in, "Config JSON");
  rt->add_option("--perm", text, "Images of t1..td, 1-based, e.g. 2,1,3,4,5");
  rt->add_option("--epsilon", epsilon, "Unit scaling k^M_1");
  rt->callback([&] { run = [&] { return cmd_roundtrip(config_from(in, pos), text, epsilon); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  std::cerr << "seed " << G.seed << "\n";
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
