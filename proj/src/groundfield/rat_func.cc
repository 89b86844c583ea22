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

#include "kmr/groundfield/rat_func.h"

#include <algorithm>

#include "kmr/errors.h"

namespace kmr {

RatFunc::RatFunc(SparsePoly num, SparsePoly den) : num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

RatFunc::RatFunc(SparsePoly num)
    : num_(std::move(num)),
      den_(SparsePoly::constant(num_.tower(), num_.num_vars(), 1)) {
  canonicalize();
}

RatFunc RatFunc::constant(const Tower& t, int num_vars, const GroundElem& c) {
  return RatFunc(SparsePoly::constant(t, num_vars, c));
}

RatFunc RatFunc::constant(const Tower& t, int num_vars, int64_t c) {
  return RatFunc(SparsePoly::constant(t, num_vars, c));
}

RatFunc RatFunc::variable(const Tower& t, int num_vars, int var) {
  return RatFunc(SparsePoly::variable(t, num_vars, var));
}

void RatFunc::canonicalize() {
  if (den_.is_zero()) throw ZeroError("zero denominator");
  const Tower& t = num_.tower();
  int nv = num_.num_vars();
  if (num_.is_zero()) {
    den_ = SparsePoly::constant(t, nv, 1);
    return;
  }
  Monomial gn = num_.monomial_gcd(), gd = den_.monomial_gcd();
  Monomial g;
  bool nontrivial = false;
  for (int i = 0; i < kMaxVars; ++i) {
    g[i] = std::min(gn[i], gd[i]);
    nontrivial |= g[i] != 0;
  }
  if (nontrivial) {
    num_ = num_.divide_monomial(g);
    den_ = den_.divide_monomial(g);
  }
  if (!den_.is_constant() && num_.size() * den_.size() <= 4096) {
    if (auto q = num_.divide_exact(den_)) {
      num_ = *q;
      den_ = SparsePoly::constant(t, nv, 1);
    } else if (!num_.is_constant()) {
      if (auto q2 = den_.divide_exact(num_)) {
        den_ = *q2;
        num_ = SparsePoly::constant(t, nv, 1);
      }
    }
  }
  GroundElem lc = den_.leading_coef();
  if (!lc.is_one()) {
    GroundElem inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool RatFunc::is_constant() const {
  if (num_.is_zero()) return true;
  if (num_.is_constant() && den_.is_constant()) return true;
  if (num_.size() != den_.size()) return false;
  // num = c * den with c = lc(num) / lc(den).
  return num_.scaled(den_.leading_coef()) == den_.scaled(num_.leading_coef());
}

GroundElem RatFunc::constant_value() const {
  if (!is_constant()) throw ConfigError("rational function is not constant");
  if (num_.is_zero()) return GroundElem::zero(tower());
  return num_.leading_coef() / den_.leading_coef();
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw ZeroError("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroError("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  return RatFunc(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
}

RatFunc RatFunc::scaled(const GroundElem& c) const { return RatFunc(num_.scaled(c), den_); }

bool RatFunc::operator==(const RatFunc& o) const {
  if (structurally_equal(o)) return true;
  return num_ * o.den_ == o.num_ * den_;
}

bool RatFunc::structurally_equal(const RatFunc& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::strong_ordering RatFunc::compare(const RatFunc& o) const {
  if (auto c = num_.compare(o.num_); c != 0) return c;
  return den_.compare(o.den_);
}

RatFunc RatFunc::unit_normalized() const {
  if (num_.is_zero()) return *this;
  return scaled(num_.leading_coef().inverse());
}

RatFunc RatFunc::substitute(int var, const GroundElem& a) const {
  return RatFunc(num_.substitute(var, a), den_.substitute(var, a));
}

RatFunc RatFunc::permuted(const std::vector<int>& perm) const {
  return RatFunc(num_.permuted(perm), den_.permuted(perm));
}

namespace {

RatFunc compose_poly(const SparsePoly& f, const std::vector<RatFunc>& images, int nv) {
  const Tower& t = f.tower();
  RatFunc acc = RatFunc::constant(t, nv, 0);
  for (const auto& term : f.terms()) {
    RatFunc m = RatFunc::constant(t, nv, term.coef);
    for (int i = 0; i < f.num_vars(); ++i)
      if (term.exp[i]) m = m * images[i].pow(term.exp[i]);
    acc = acc + m;
  }
  return acc;
}

}  // namespace

RatFunc RatFunc::compose(const std::vector<RatFunc>& images) const {
  int nv = images.empty() ? num_vars() : images[0].num_vars();
  return compose_poly(num_, images, nv) / compose_poly(den_, images, nv);
}

RatFunc RatFunc::derivative(int var) const {
  SparsePoly n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
  if (n.is_zero()) return constant(tower(), num_vars(), 0);
  return RatFunc(n, den_ * den_);
}

GroundElem RatFunc::evaluate(const std::vector<GroundElem>& point) const {
  GroundElem d = den_.evaluate(point);
  if (d.is_zero()) throw ZeroError("denominator vanishes at the evaluation point");
  return num_.evaluate(point) / d;
}

bool RatFunc::all_derivatives_vanish() const {
  for (int i = 0; i < num_vars(); ++i) {
    SparsePoly n = num_.derivative(i) * den_ - num_ * den_.derivative(i);
    if (!n.is_zero()) return false;
  }
  return true;
}

RatFunc RatFunc::pth_root() const {
  auto rn = num_.pth_root();
  auto rd = den_.pth_root();
  if (rn && rd) return RatFunc(*rn, *rd);
  uint32_t p = tower().p();
  SparsePoly m = num_ * den_.pow(p - 1);
  auto rm = m.pth_root();
  if (!rm) throw ConfigError("rational function is not a p-th power");
  return RatFunc(*rm, den_);
}

size_t RatFunc::hash() const { return num_.hash() * 31 + den_.hash(); }

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace kmr
