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

#include "kmr/kmilnor/symbol.h"

#include <algorithm>
#include <map>

#include "kmr/errors.h"
#include "kmr/groundfield/roots.h"

namespace kmr {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::False:
      return "false";
    case Truth::True:
      return "true";
    default:
      return "unknown";
  }
}

std::string Symbol::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + entries[i].to_string();
  return s + "}";
}

FormalSymbol FormalSymbol::from_symbol(const Symbol& s, uint32_t ell) {
  FormalSymbol f(ell, s.degree());
  for (const auto& e : s.entries)
    if (e.is_zero()) throw ZeroEntry("symbol entry is zero");
  f.add_term(1, s.entries);
  return f;
}

FormalSymbol FormalSymbol::scalar(uint32_t ell, int64_t value) {
  FormalSymbol f(ell, 0);
  f.add_term(value, {});
  return f;
}

uint32_t FormalSymbol::scalar_value() const {
  if (degree_ != 0) throw ConfigError("symbol of positive degree has no scalar value");
  return terms_.empty() ? 0 : terms_[0].coef;
}

void FormalSymbol::add_term(int64_t coef, std::vector<RatFunc> entries) {
  if (entries.size() != degree_) throw ConfigError("symbol degree mismatch");
  uint32_t c = mod_reduce(coef, ell_);
  if (c == 0) return;
  for (auto& e : entries) {
    if (e.is_zero()) throw ZeroEntry("symbol entry is zero");
    if (e.is_constant()) return;
    e = e.unit_normalized();
  }
  // Insertion sort with sign tracking.
  bool neg = false;
  for (size_t i = 1; i < entries.size(); ++i) {
    for (size_t j = i; j > 0; --j) {
      auto cmp = entries[j - 1].compare(entries[j]);
      if (cmp == 0) return;  // repeated entry
      if (cmp < 0) break;
      std::swap(entries[j - 1], entries[j]);
      neg = !neg;
    }
  }
  if (neg) c = ell_ - c;
  auto less = [](const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      auto cmp = a[i].compare(b[i]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  };
  auto it = std::lower_bound(terms_.begin(), terms_.end(), entries,
                             [&](const SymbolTerm& t, const std::vector<RatFunc>& e) { return less(t.entries, e); });
  if (it != terms_.end() && !less(entries, it->entries)) {
    it->coef = (it->coef + c) % ell_;
    if (it->coef == 0) terms_.erase(it);
    return;
  }
  terms_.insert(it, SymbolTerm{c, std::move(entries)});
}

FormalSymbol FormalSymbol::operator+(const FormalSymbol& o) const {
  if (o.ell_ != ell_ || o.degree_ != degree_) throw ConfigError("adding symbols of different shape");
  FormalSymbol r = *this;
  for (const auto& t : o.terms_) r.add_term(t.coef, t.entries);
  return r;
}

FormalSymbol FormalSymbol::operator-(const FormalSymbol& o) const { return *this + o.scaled(-1); }

FormalSymbol FormalSymbol::scaled(int64_t c) const {
  FormalSymbol r(ell_, degree_);
  for (const auto& t : terms_) r.add_term(static_cast<int64_t>(t.coef) * mod_reduce(c, ell_), t.entries);
  return r;
}

namespace {

// Divisor of a one-variable function on the affine line, mod ell. Points
// are canonical roots; infinity is handled by the caller.
void add_divisor(const SparsePoly& f, int var, int64_t sign, uint32_t ell,
                 std::map<GroundElem, int64_t>& div) {
  if (f.is_constant()) return;
  for (const auto& r : univariate_roots(f, var)) div[r.root] += sign * r.mult;
  (void)ell;
}

}  // namespace

Truth FormalSymbol::is_zero() const {
  if (terms_.empty()) return Truth::True;
  if (degree_ == 0) return Truth::False;
  if (degree_ > 1) return Truth::Unknown;
  const Tower& t = terms_[0].entries[0].tower();
  int nv = terms_[0].entries[0].num_vars();
  RatFunc prod = RatFunc::constant(t, nv, 1);
  uint32_t support = 0;
  for (const auto& term : terms_) {
    prod = prod * term.entries[0].pow(term.coef);
    support |= term.entries[0].support();
  }
  if (prod.is_constant()) return Truth::True;
  if (support & (support - 1)) return Truth::Unknown;
  int var = 0;
  while (!(support & (1u << var))) ++var;
  // In k(t) the class of f is zero iff every multiplicity of div(f) is
  // divisible by ell (the degree at infinity then follows).
  std::map<GroundElem, int64_t> div;
  for (const auto& term : terms_) {
    add_divisor(term.entries[0].num(), var, term.coef, ell_, div);
    add_divisor(term.entries[0].den(), var, -static_cast<int64_t>(term.coef), ell_, div);
  }
  for (const auto& [pt, m] : div)
    if (mod_reduce(m, ell_) != 0) return Truth::False;
  return Truth::True;
}

std::string FormalSymbol::to_string() const {
  if (degree_ == 0) return std::to_string(scalar_value());
  if (terms_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    if (terms_[i].coef != 1) s += std::to_string(terms_[i].coef) + "*";
    s += Symbol{terms_[i].entries}.to_string();
  }
  return s;
}

FormalSymbol tame_step(const FormalSymbol& s, const CoordValuation& v, const RatFunc& pi) {
  if (s.degree() == 0) throw ConfigError("tame symbol of a degree 0 symbol");
  if (pi.is_zero() || valuation_order(pi, v) != static_cast<int64_t>(v.exponent))
    throw NotUniformizer(pi.to_string() + " is not a uniformizer for " + v.to_string());
  uint32_t ell = s.ell();
  FormalSymbol out(ell, s.degree() - 1);
  for (const auto& term : s.terms()) {
    size_t m = term.entries.size();
    std::vector<int64_t> n(m);
    std::vector<RatFunc> res(m);
    for (size_t i = 0; i < m; ++i) {
      if (term.entries[i].is_zero()) throw ZeroEntry("symbol entry is zero");
      OrderResidue o = order_and_residue(term.entries[i], v);
      n[i] = o.order;
      res[i] = std::move(o.residue);
    }
    for (size_t j = 0; j < m; ++j) {
      if (mod_reduce(n[j], ell) == 0) continue;
      std::vector<RatFunc> rest;
      rest.reserve(m - 1);
      for (size_t i = 0; i < m; ++i)
        if (i != j) rest.push_back(res[i]);
      int64_t sign = (j % 2) ? -1 : 1;
      out.add_term(sign * mod_reduce(n[j], ell) * static_cast<int64_t>(term.coef), std::move(rest));
    }
  }
  return out;
}

FormalSymbol tame_step(const Symbol& s, uint32_t ell, const CoordValuation& v, const RatFunc& pi) {
  return tame_step(FormalSymbol::from_symbol(s, ell), v, pi);
}

}  // namespace kmr
