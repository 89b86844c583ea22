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

#include "kmr/groundfield/sparse_poly.h"

#include <algorithm>
#include <sstream>

#include "kmr/errors.h"

namespace kmr {

Monomial monomial_zero() {
  Monomial m{};
  m.fill(0);
  return m;
}

std::string var_name(int i) { return "t" + std::to_string(i + 1); }

namespace {

uint32_t small_binom(uint32_t n, uint32_t k, uint32_t p) {
  if (k > n) return 0;
  uint64_t num = 1, den = 1;
  for (uint32_t i = 0; i < k; ++i) {
    num = num * ((n - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return static_cast<uint32_t>(num * mod_inverse(static_cast<uint32_t>(den), p) % p);
}

// Binomial coefficient mod p by Lucas' theorem.
uint32_t binom_mod(uint32_t n, uint32_t k, uint32_t p) {
  uint64_t r = 1;
  while (n || k) {
    uint32_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    r = r * small_binom(ni, ki, p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<uint32_t>(r);
}

bool exp_greater(const Term& a, const Term& b) { return a.exp > b.exp; }

}  // namespace

SparsePoly::SparsePoly(const Tower& t, int num_vars) : tower_(&t), num_vars_(num_vars) {
  if (num_vars < 0 || num_vars > kMaxVars)
    throw ConfigError("number of variables must be between 0 and " + std::to_string(kMaxVars));
}

SparsePoly SparsePoly::constant(const Tower& t, int num_vars, const GroundElem& c) {
  SparsePoly p(t, num_vars);
  if (!c.is_zero()) p.terms_.push_back({monomial_zero(), c.canonical()});
  return p;
}

SparsePoly SparsePoly::constant(const Tower& t, int num_vars, int64_t c) {
  return constant(t, num_vars, GroundElem::from_int(t, c));
}

SparsePoly SparsePoly::variable(const Tower& t, int num_vars, int var) {
  if (var < 0 || var >= num_vars) throw ConfigError("variable index out of range");
  Monomial m = monomial_zero();
  m[var] = 1;
  return monomial(t, num_vars, m, GroundElem::one(t));
}

SparsePoly SparsePoly::monomial(const Tower& t, int num_vars, const Monomial& e, const GroundElem& c) {
  SparsePoly p(t, num_vars);
  if (!c.is_zero()) p.terms_.push_back({e, c.canonical()});
  return p;
}

SparsePoly SparsePoly::from_terms(const Tower& t, int num_vars, std::vector<Term> terms) {
  SparsePoly p(t, num_vars);
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void SparsePoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), exp_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef = out.back().coef + t.coef;
    } else {
      out.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : out)
    if (!t.coef.is_zero()) terms_.push_back({t.exp, t.coef.canonical()});
}

bool SparsePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == monomial_zero());
}

GroundElem SparsePoly::constant_value() const {
  if (terms_.empty()) return GroundElem::zero(*tower_);
  if (!is_constant()) throw ConfigError("polynomial is not constant");
  return terms_[0].coef;
}

int SparsePoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) {
    int s = 0;
    for (int i = 0; i < num_vars_; ++i) s += t.exp[i];
    d = std::max(d, s);
  }
  return d;
}

int SparsePoly::degree_in(int var) const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, int(t.exp[var]));
  return d;
}

int SparsePoly::min_degree_in(int var) const {
  if (terms_.empty()) return -1;
  int d = 1 << 30;
  for (const auto& t : terms_) d = std::min(d, int(t.exp[var]));
  return d;
}

uint32_t SparsePoly::support() const {
  uint32_t s = 0;
  for (const auto& t : terms_)
    for (int i = 0; i < num_vars_; ++i)
      if (t.exp[i]) s |= 1u << i;
  return s;
}

uint32_t SparsePoly::coef_level() const {
  uint32_t l = 1;
  for (const auto& t : terms_) l = std::max(l, t.coef.canonical().level());
  return l;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r(*tower_, num_vars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].exp > o.terms_[j].exp)) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].exp > terms_[i].exp) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      GroundElem c = terms_[i].coef + o.terms_[j].coef;
      if (!c.is_zero()) r.terms_.push_back({terms_[i].exp, c});
      ++i;
      ++j;
    }
  }
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  SparsePoly r(*tower_, num_vars_);
  if (terms_.empty() || o.terms_.empty()) return r;
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial e;
      for (int k = 0; k < kMaxVars; ++k) e[k] = static_cast<uint16_t>(a.exp[k] + b.exp[k]);
      r.terms_.push_back({e, a.coef * b.coef});
    }
  }
  r.normalize();
  return r;
}

SparsePoly SparsePoly::scaled(const GroundElem& c) const {
  if (c.is_zero()) return SparsePoly(*tower_, num_vars_);
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.coef = t.coef * c;
  return r;
}

SparsePoly SparsePoly::pow(unsigned k) const {
  SparsePoly result = constant(*tower_, num_vars_, 1);
  SparsePoly base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

std::strong_ordering SparsePoly::compare(const SparsePoly& o) const {
  size_t n = std::min(terms_.size(), o.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].exp <=> o.terms_[i].exp; c != 0) return c;
    if (auto c = terms_[i].coef <=> o.terms_[i].coef; c != 0) return c;
  }
  return terms_.size() <=> o.terms_.size();
}

SparsePoly SparsePoly::coeff_in(int var, int k) const {
  SparsePoly r(*tower_, num_vars_);
  for (const auto& t : terms_) {
    if (t.exp[var] != k) continue;
    Term u = t;
    u.exp[var] = 0;
    r.terms_.push_back(u);
  }
  r.normalize();
  return r;
}

std::vector<SparsePoly> SparsePoly::coefficient_polys(int var) const {
  std::vector<std::pair<Monomial, SparsePoly>> groups;
  for (const auto& t : terms_) {
    Monomial rest = t.exp;
    rest[var] = 0;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == rest; });
    Monomial only = monomial_zero();
    only[var] = t.exp[var];
    SparsePoly mono = monomial(*tower_, num_vars_, only, t.coef);
    if (it == groups.end()) {
      groups.emplace_back(rest, mono);
    } else {
      it->second = it->second + mono;
    }
  }
  std::vector<SparsePoly> out;
  for (auto& g : groups) out.push_back(std::move(g.second));
  return out;
}

SparsePoly SparsePoly::taylor_shift(int var, const GroundElem& a) const {
  if (a.is_zero()) return *this;
  uint32_t p = tower_->p();
  int maxe = std::max(0, degree_in(var));
  std::vector<GroundElem> apow(maxe + 1);
  apow[0] = GroundElem::one(*tower_);
  for (int i = 1; i <= maxe; ++i) apow[i] = apow[i - 1] * a;
  SparsePoly r(*tower_, num_vars_);
  for (const auto& t : terms_) {
    uint32_t e = t.exp[var];
    for (uint32_t k = 0; k <= e; ++k) {
      uint32_t b = binom_mod(e, k, p);
      if (!b) continue;
      Term u = t;
      u.exp[var] = static_cast<uint16_t>(k);
      u.coef = t.coef * apow[e - k] * GroundElem::from_int(*tower_, b);
      r.terms_.push_back(u);
    }
  }
  r.normalize();
  return r;
}

SparsePoly SparsePoly::substitute(int var, const GroundElem& a) const {
  SparsePoly r(*tower_, num_vars_);
  int maxe = std::max(0, degree_in(var));
  std::vector<GroundElem> apow(maxe + 1);
  apow[0] = GroundElem::one(*tower_);
  for (int i = 1; i <= maxe; ++i) apow[i] = apow[i - 1] * a;
  for (const auto& t : terms_) {
    Term u = t;
    u.coef = t.coef * apow[t.exp[var]];
    u.exp[var] = 0;
    r.terms_.push_back(u);
  }
  r.normalize();
  return r;
}

SparsePoly SparsePoly::reverse_in(int var, int deg) const {
  SparsePoly r(*tower_, num_vars_);
  for (const auto& t : terms_) {
    Term u = t;
    u.exp[var] = static_cast<uint16_t>(deg - t.exp[var]);
    r.terms_.push_back(u);
  }
  r.normalize();
  return r;
}

SparsePoly SparsePoly::derivative(int var) const {
  SparsePoly r(*tower_, num_vars_);
  for (const auto& t : terms_) {
    if (t.exp[var] == 0) continue;
    Term u = t;
    u.coef = t.coef * GroundElem::from_int(*tower_, t.exp[var]);
    u.exp[var] = static_cast<uint16_t>(t.exp[var] - 1);
    r.terms_.push_back(u);
  }
  r.normalize();
  return r;
}

GroundElem SparsePoly::evaluate(const std::vector<GroundElem>& point) const {
  GroundElem s = GroundElem::zero(*tower_);
  for (const auto& t : terms_) {
    GroundElem v = t.coef;
    for (int i = 0; i < num_vars_; ++i)
      if (t.exp[i]) v = v * point[i].pow_int(t.exp[i]);
    s = s + v;
  }
  return s;
}

SparsePoly SparsePoly::permuted(const std::vector<int>& perm) const {
  SparsePoly r(*tower_, num_vars_);
  for (const auto& t : terms_) {
    Term u = t;
    u.exp = monomial_zero();
    for (int i = 0; i < num_vars_; ++i) u.exp[i] = t.exp[perm[i]];
    r.terms_.push_back(u);
  }
  r.normalize();
  return r;
}

SparsePoly SparsePoly::compose(const std::vector<SparsePoly>& images) const {
  int nv = images.empty() ? num_vars_ : images[0].num_vars();
  SparsePoly r(*tower_, nv);
  for (const auto& t : terms_) {
    SparsePoly m = constant(*tower_, nv, t.coef);
    for (int i = 0; i < num_vars_; ++i)
      if (t.exp[i]) m = m * images[i].pow(t.exp[i]);
    r = r + m;
  }
  return r;
}

SparsePoly SparsePoly::frobenius_coeffs(int k) const {
  SparsePoly r = *this;
  for (auto& t : r.terms_) {
    uint32_t m = t.coef.canonical().level();
    int64_t kk = ((k % int64_t(m)) + m) % m;
    t.coef = t.coef.pow(big_pow(tower_->p(), static_cast<uint64_t>(kk)));
  }
  return r;
}

Monomial SparsePoly::monomial_gcd() const {
  Monomial g = monomial_zero();
  if (terms_.empty()) return g;
  g = terms_[0].exp;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVars; ++i) g[i] = std::min(g[i], t.exp[i]);
  return g;
}

SparsePoly SparsePoly::divide_monomial(const Monomial& m) const {
  SparsePoly r = *this;
  for (auto& t : r.terms_)
    for (int i = 0; i < kMaxVars; ++i) t.exp[i] = static_cast<uint16_t>(t.exp[i] - m[i]);
  return r;
}

SparsePoly SparsePoly::multiply_monomial(const Monomial& m) const {
  SparsePoly r = *this;
  for (auto& t : r.terms_)
    for (int i = 0; i < kMaxVars; ++i) t.exp[i] = static_cast<uint16_t>(t.exp[i] + m[i]);
  return r;
}

std::optional<SparsePoly> SparsePoly::divide_exact(const SparsePoly& o) const {
  if (o.is_zero()) throw ZeroPolyError("division by the zero polynomial");
  SparsePoly q(*tower_, num_vars_);
  SparsePoly rem = *this;
  const Term& lo = o.terms_.front();
  GroundElem linv = lo.coef.inverse();
  size_t steps = 0;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_.front();
    Monomial e;
    for (int i = 0; i < kMaxVars; ++i) {
      if (lt.exp[i] < lo.exp[i]) return std::nullopt;
      e[i] = static_cast<uint16_t>(lt.exp[i] - lo.exp[i]);
    }
    SparsePoly t = monomial(*tower_, num_vars_, e, lt.coef * linv);
    q = q + t;
    rem = rem - t * o;
    if (++steps > 200000) return std::nullopt;
  }
  return q;
}

SparsePoly SparsePoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(terms_.front().coef.inverse());
}

std::optional<SparsePoly> SparsePoly::pth_root() const {
  uint32_t p = tower_->p();
  SparsePoly r(*tower_, num_vars_);
  for (const auto& t : terms_) {
    Term u = t;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.exp[i] % p) return std::nullopt;
      u.exp[i] = static_cast<uint16_t>(t.exp[i] / p);
    }
    r.terms_.push_back(u);
  }
  return r.frobenius_coeffs(-1);
}

size_t SparsePoly::hash() const {
  size_t h = 0xcbf29ce484222325ULL;
  for (const auto& t : terms_) {
    for (int i = 0; i < num_vars_; ++i) h = (h ^ t.exp[i]) * 0x100000001b3ULL;
    h = (h ^ t.coef.hash()) * 0x100000001b3ULL;
  }
  return h;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_var = false;
    for (int i = 0; i < num_vars_; ++i) has_var |= t.exp[i] != 0;
    std::string c = t.coef.to_string();
    bool wrote = false;
    if (!has_var || !t.coef.is_one()) {
      os << c;
      wrote = true;
    }
    for (int i = 0; i < num_vars_; ++i) {
      if (!t.exp[i]) continue;
      if (wrote) os << "*";
      os << var_name(i);
      if (t.exp[i] > 1) os << "^" << t.exp[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace kmr
