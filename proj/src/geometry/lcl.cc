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

#include "kmr/geometry/lcl.h"

#include <algorithm>
#include <cctype>

#include "kmr/errors.h"

namespace kmr {

namespace {

struct SExpr {
  std::string atom;
  std::vector<SExpr> list;
  bool is_list = false;
};

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  SExpr read() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of formula");
    if (s_[i_] == ')') throw ParseError("unexpected ')' at offset " + std::to_string(i_));
    if (s_[i_] == '(') {
      ++i_;
      SExpr e;
      e.is_list = true;
      for (;;) {
        skip();
        if (i_ >= s_.size()) throw ParseError("missing ')'");
        if (s_[i_] == ')') {
          ++i_;
          return e;
        }
        e.list.push_back(read());
      }
    }
    size_t start = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' && s_[i_] != ')') ++i_;
    return SExpr{s_.substr(start, i_ - start), {}, false};
  }

  void expect_end() {
    skip();
    if (i_ != s_.size()) throw ParseError("trailing input at offset " + std::to_string(i_));
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  const std::string& s_;
  size_t i_ = 0;
};

std::string atom_of(const SExpr& e) {
  if (e.is_list) throw ParseError("expected a variable, got a list");
  return e.atom;
}

LclFormula convert(const SExpr& e) {
  using K = LclFormula::Kind;
  LclFormula f;
  if (!e.is_list) {
    if (e.atom == "true") return f;
    if (e.atom == "false") {
      f.kind = K::False;
      return f;
    }
    throw ParseError("unexpected atom " + e.atom);
  }
  if (e.list.empty()) throw ParseError("empty list");
  std::string head = atom_of(e.list[0]);
  size_t nargs = e.list.size() - 1;
  auto need = [&](size_t k) {
    if (nargs != k)
      throw ArityMismatch(head + " takes " + std::to_string(k) + " arguments, got " + std::to_string(nargs));
  };
  if (head.rfind("cl", 0) == 0) {
    if (nargs < 1) throw ArityMismatch("cl needs at least the point argument");
    if (head.size() > 2) {
      std::string digits = head.substr(2);
      if (!std::all_of(digits.begin(), digits.end(), ::isdigit)) throw ParseError("unknown relation " + head);
      if (std::stoul(digits) != nargs - 1)
        throw ArityMismatch(head + " is " + std::to_string(std::stoul(digits) + 1) + "-ary, got " +
                            std::to_string(nargs) + " arguments");
    }
    f.kind = K::Cl;
    for (size_t i = 1; i < e.list.size(); ++i) f.terms.push_back(atom_of(e.list[i]));
    return f;
  }
  if (head == "=") {
    need(2);
    f.kind = K::Eq;
    f.terms = {atom_of(e.list[1]), atom_of(e.list[2])};
    return f;
  }
  if (head == "and" || head == "or") {
    f.kind = head == "and" ? K::And : K::Or;
    for (size_t i = 1; i < e.list.size(); ++i) f.sub.push_back(convert(e.list[i]));
    return f;
  }
  if (head == "not") {
    need(1);
    f.kind = K::Not;
    f.sub.push_back(convert(e.list[1]));
    return f;
  }
  if (head == "implies") {
    need(2);
    f.kind = K::Implies;
    f.sub = {convert(e.list[1]), convert(e.list[2])};
    return f;
  }
  if (head == "exists" || head == "forall") {
    need(2);
    f.kind = head == "exists" ? K::Exists : K::Forall;
    f.var = atom_of(e.list[1]);
    f.sub.push_back(convert(e.list[2]));
    return f;
  }
  throw ParseError("unknown connective " + head);
}

void collect_free(const LclFormula& f, std::vector<std::string>& bound, const std::map<std::string, size_t>& params,
                  std::vector<std::string>& out) {
  using K = LclFormula::Kind;
  for (const auto& t : f.terms)
    if (!params.count(t) && std::find(bound.begin(), bound.end(), t) == bound.end() &&
        std::find(out.begin(), out.end(), t) == out.end())
      out.push_back(t);
  if (f.kind == K::Exists || f.kind == K::Forall) bound.push_back(f.var);
  for (const auto& s : f.sub) collect_free(s, bound, params, out);
  if (f.kind == K::Exists || f.kind == K::Forall) bound.pop_back();
}

}  // namespace

std::string LclFormula::to_string() const {
  using K = Kind;
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += " " + x;
    return s;
  };
  switch (kind) {
    case K::True:
      return "true";
    case K::False:
      return "false";
    case K::Cl:
      return "(cl" + std::to_string(terms.size() - 1) + join(terms) + ")";
    case K::Eq:
      return "(=" + join(terms) + ")";
    case K::Exists:
    case K::Forall:
      return std::string("(") + (kind == K::Exists ? "exists " : "forall ") + var + " " + sub[0].to_string() + ")";
    default: {
      std::string s = kind == K::And ? "(and" : kind == K::Or ? "(or" : kind == K::Not ? "(not" : "(implies";
      for (const auto& x : sub) s += " " + x.to_string();
      return s + ")";
    }
  }
}

LclFormula parse_lcl(const std::string& text) {
  Reader r(text);
  SExpr e = r.read();
  r.expect_end();
  return convert(e);
}

std::vector<std::string> free_variables(const LclFormula& f, const std::map<std::string, size_t>& params) {
  std::vector<std::string> bound, out;
  collect_free(f, bound, params, out);
  return out;
}

namespace {

bool eval(const ClosureGeometry& g, const LclFormula& f, std::map<std::string, size_t>& env) {
  using K = LclFormula::Kind;
  auto val = [&](const std::string& t) {
    auto it = env.find(t);
    if (it == env.end()) throw ConfigError("unbound name " + t);
    return it->second;
  };
  switch (f.kind) {
    case K::True:
      return true;
    case K::False:
      return false;
    case K::Cl: {
      PointSet s = 0;
      for (size_t i = 1; i < f.terms.size(); ++i) s |= PointSet{1} << val(f.terms[i]);
      return g.cl(s) >> val(f.terms[0]) & 1;
    }
    case K::Eq:
      return val(f.terms[0]) == val(f.terms[1]);
    case K::And:
      for (const auto& s : f.sub)
        if (!eval(g, s, env)) return false;
      return true;
    case K::Or:
      for (const auto& s : f.sub)
        if (eval(g, s, env)) return true;
      return false;
    case K::Not:
      return !eval(g, f.sub[0], env);
    case K::Implies:
      return !eval(g, f.sub[0], env) || eval(g, f.sub[1], env);
    case K::Exists:
    case K::Forall: {
      auto saved = env.find(f.var) != env.end() ? std::optional<size_t>(env[f.var]) : std::nullopt;
      bool want = f.kind == K::Exists;
      bool result = !want;
      for (size_t x = 0; x < g.size(); ++x) {
        env[f.var] = x;
        if (eval(g, f.sub[0], env) == want) {
          result = want;
          break;
        }
      }
      if (saved)
        env[f.var] = *saved;
      else
        env.erase(f.var);
      return result;
    }
  }
  return false;
}

}  // namespace

bool holds(const ClosureGeometry& g, const LclFormula& f, const std::map<std::string, size_t>& env) {
  std::map<std::string, size_t> e = env;
  return eval(g, f, e);
}

LclResult eval_lcl(const ClosureGeometry& g, const LclFormula& f, const std::map<std::string, size_t>& params,
                   std::optional<std::vector<std::string>> vars) {
  for (const auto& [name, p] : params)
    if (p >= g.size()) throw ConfigError("parameter " + name + " is not a point");
  std::vector<std::string> fv = free_variables(f, params);
  LclResult res;
  if (vars) {
    std::vector<std::string> a = *vars, b = fv;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw ArityMismatch("declared variables do not match the free variables of " + f.to_string());
    res.vars = *vars;
  } else {
    res.vars = fv;
  }
  size_t k = res.vars.size();
  std::map<std::string, size_t> env = params;
  std::vector<size_t> tup(k, 0);
  if (g.size() == 0 && k > 0) return res;
  for (;;) {
    for (size_t i = 0; i < k; ++i) env[res.vars[i]] = tup[i];
    if (eval(g, f, env)) res.tuples.push_back(tup);
    size_t i = k;
    while (i > 0 && ++tup[i - 1] == g.size()) tup[--i] = 0;
    if (i == 0) break;
  }
  return res;
}

}  // namespace kmr
