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

#include "kmr/groundfield/ground_elem.h"

#include <algorithm>
#include <sstream>

#include "kmr/errors.h"

namespace kmr {

GroundElem::GroundElem(const Tower& tower, uint32_t level, Raw coeffs) : tower_(&tower) {
  if (coeffs.size() != level) throw LevelError("coefficient vector length must equal the level");
  for (auto& c : coeffs) c %= tower.p();
  if (Tower::is_chain_level(level)) tower.level(level);
  else Tower::host_level(level);
  level_ = level;
  c_ = std::move(coeffs);
}

GroundElem GroundElem::make_canonical(const Tower& t, Raw chain_coeffs) {
  GroundElem g;
  g.tower_ = &t;
  auto [lv, raw] = t.descend(chain_coeffs);
  g.level_ = lv;
  g.c_ = std::move(raw);
  return g;
}

GroundElem GroundElem::zero(const Tower& t) { return from_int(t, 0); }
GroundElem GroundElem::one(const Tower& t) { return from_int(t, 1); }

GroundElem GroundElem::from_int(const Tower& t, int64_t c) {
  GroundElem g;
  g.tower_ = &t;
  g.level_ = 1;
  g.c_ = Raw{mod_reduce(c, t.p())};
  return g;
}

GroundElem GroundElem::random(const Tower& t, uint32_t level, std::mt19937_64& rng) {
  t.level(level);
  Raw r(level);
  for (auto& c : r) c = static_cast<uint32_t>(rng() % t.p());
  return make_canonical(t, std::move(r));
}

GroundElem GroundElem::generator(const Tower& t, uint32_t level) {
  const ChainLevel& l = t.level(level);
  return make_canonical(t, t.to_rel(level, l.abs.generator()));
}

bool GroundElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](uint32_t c) { return c == 0; });
}

bool GroundElem::is_one() const {
  GroundElem c = canonical();
  return c.level_ == 1 && c.c_[0] == 1;
}

uint32_t GroundElem::prime_field_value() const {
  GroundElem c = canonical();
  if (c.level_ != 1) throw LevelError("element is not in the prime field");
  return c.c_[0];
}

GroundElem GroundElem::canonical() const {
  if (Tower::is_chain_level(level_)) {
    if (level_ == 1) return *this;
    return make_canonical(*tower_, c_);
  }
  uint32_t h = Tower::host_level(level_);
  const auto& basis = tower_->subfield_basis(level_);
  Raw host(h, 0);
  for (uint32_t i = 0; i < level_; ++i) {
    if (!c_[i]) continue;
    for (uint32_t j = 0; j < h; ++j) host[j] = static_cast<uint32_t>((host[j] + uint64_t(c_[i]) * basis[i][j]) % tower_->p());
  }
  return make_canonical(*tower_, std::move(host));
}

Raw GroundElem::at_chain_level(uint32_t m) const {
  GroundElem c = canonical();
  if (m % c.level_ != 0 || !Tower::is_chain_level(m))
    throw LevelError("cannot place level " + std::to_string(c.level_) + " element at " + std::to_string(m));
  tower_->level(m);
  return tower_->pad(c.c_, m);
}

namespace {

uint32_t common_level(const GroundElem& a, const GroundElem& b) {
  return std::max(a.canonical().level(), b.canonical().level());
}

}  // namespace

GroundElem GroundElem::operator+(const GroundElem& o) const {
  uint32_t m = common_level(*this, o);
  return make_canonical(*tower_, tower_->add(m, at_chain_level(m), o.at_chain_level(m)));
}

GroundElem GroundElem::operator-(const GroundElem& o) const {
  uint32_t m = common_level(*this, o);
  return make_canonical(*tower_, tower_->sub(m, at_chain_level(m), o.at_chain_level(m)));
}

GroundElem GroundElem::operator-() const {
  GroundElem c = canonical();
  return make_canonical(*tower_, tower_->neg(c.level_, c.c_));
}

GroundElem GroundElem::operator*(const GroundElem& o) const {
  uint32_t m = common_level(*this, o);
  return make_canonical(*tower_, tower_->mul(m, at_chain_level(m), o.at_chain_level(m)));
}

GroundElem GroundElem::inverse() const {
  if (is_zero()) throw ZeroError("inverse of zero");
  GroundElem c = canonical();
  return make_canonical(*tower_, tower_->inv(c.level_, c.c_));
}

GroundElem GroundElem::operator/(const GroundElem& o) const { return *this * o.inverse(); }

GroundElem GroundElem::pow(const BigInt& e) const {
  GroundElem c = canonical();
  return make_canonical(*tower_, tower_->pow(c.level_, c.c_, e));
}

GroundElem GroundElem::pow_int(int64_t e) const {
  if (e < 0) return inverse().pow(BigInt(-e));
  return pow(BigInt(e));
}

bool GroundElem::operator==(const GroundElem& o) const {
  if (tower_ != o.tower_) return false;
  GroundElem a = canonical(), b = o.canonical();
  return a.level_ == b.level_ && a.c_ == b.c_;
}

std::strong_ordering GroundElem::operator<=>(const GroundElem& o) const {
  GroundElem a = canonical(), b = o.canonical();
  if (auto c = a.level_ <=> b.level_; c != 0) return c;
  return a.c_ <=> b.c_;
}

size_t GroundElem::hash() const {
  GroundElem a = canonical();
  size_t h = a.level_ * 0x9e3779b97f4a7c15ULL;
  for (uint32_t c : a.c_) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

std::string GroundElem::to_string() const {
  GroundElem a = canonical();
  if (a.level_ == 1) return std::to_string(a.c_[0]);
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < a.c_.size(); ++i) os << (i ? "," : "") << a.c_[i];
  os << "]@" << a.level_;
  return os.str();
}

GroundElem tower_embed(const GroundElem& x, uint32_t target_level) {
  if (target_level == 0 || target_level % x.level() != 0)
    throw LevelError("level " + std::to_string(x.level()) + " does not divide " +
                     std::to_string(target_level));
  const Tower& t = x.tower();
  if (Tower::is_chain_level(target_level)) {
    // Chain levels keep the padded coordinates without descending.
    return GroundElem(t, target_level, x.at_chain_level(target_level));
  }
  return tower_project(x, target_level);
}

GroundElem tower_project(const GroundElem& x, uint32_t level) {
  const Tower& t = x.tower();
  if (Tower::is_chain_level(level)) {
    GroundElem c = x.canonical();
    if (level % c.level() != 0 || c.level() > level)
      throw LevelError("element does not lie in level " + std::to_string(level));
    return c;
  }
  uint32_t h = Tower::host_level(level);
  const auto& basis = t.subfield_basis(level);
  Raw host = x.at_chain_level(h);
  ModMatrix cols(h, level, t.p());
  for (uint32_t i = 0; i < level; ++i)
    for (uint32_t j = 0; j < h; ++j) cols.at(j, i) = basis[i][j];
  auto sol = cols.solve(host);
  if (!sol) throw LevelError("element does not lie in level " + std::to_string(level));
  return GroundElem(t, level, *sol);
}

namespace {

BigInt inverse_mod_big(const BigInt& a, const BigInt& m) {
  BigInt t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    BigInt q = r / nr;
    BigInt tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += m;
  return t;
}

}  // namespace

GroundElem ell_th_root(const GroundElem& x, uint32_t ell) {
  if (x.is_zero()) throw ZeroError("ell-th root of zero");
  const Tower& t = x.tower();
  if (ell == t.p()) throw ConfigError("ell must differ from the characteristic");
  GroundElem xc = x.canonical();
  const auto& chain = Tower::chain();
  size_t start = static_cast<size_t>(std::find(chain.begin(), chain.end(), xc.level()) - chain.begin());
  for (size_t idx = start; idx < chain.size(); ++idx) {
    uint32_t m = chain[idx];
    BigInt q1 = big_pow(t.p(), m) - 1;
    GroundElem xm(t, m, xc.at_chain_level(m));
    if (q1 % ell != 0) {
      return xm.pow(inverse_mod_big(BigInt(ell) % q1, q1));
    }
    if (!xm.pow(q1 / ell).is_one()) continue;
    uint32_t s = 0;
    BigInt tt = q1;
    while (tt % ell == 0) {
      tt /= ell;
      ++s;
    }
    BigInt u = tt == 1 ? BigInt(0) : inverse_mod_big(BigInt(ell) % tt, tt);
    GroundElem y0 = xm.pow(u);
    BigInt eexp = (u * ell + q1 - 1) % q1;
    GroundElem e = xm.pow(eexp);
    std::mt19937_64 rng(t.seed() ^ (uint64_t(m) << 20) ^ ell);
    GroundElem z;
    for (;;) {
      z = GroundElem::random(t, m, rng);
      if (!z.is_zero() && !z.pow(q1 / ell).is_one()) break;
    }
    GroundElem g = z.pow(tt);  // generates the ell-Sylow subgroup
    BigInt ls = 1;
    for (uint32_t i = 0; i < s; ++i) ls *= ell;
    GroundElem h = g.pow(ls / ell);  // order ell
    BigInt k = 0, lj = 1;
    GroundElem ginv = g.inverse();
    for (uint32_t j = 0; j < s; ++j) {
      GroundElem probe = (e * ginv.pow(k)).pow(ls / (lj * ell));
      uint32_t digit = 0;
      GroundElem hp = GroundElem::one(t);
      while (hp != probe) {
        hp = hp * h;
        ++digit;
        if (digit > ell) throw ZeroError("discrete logarithm failed");
      }
      k += lj * digit;
      lj *= ell;
    }
    GroundElem y = y0 * ginv.pow(k / ell);
    return y.canonical();
  }
  throw LevelError("ell-th root lies beyond the tower chain");
}

uint64_t multiplicative_order(const GroundElem& x) {
  if (x.is_zero()) throw ZeroError("order of zero");
  GroundElem c = x.canonical();
  BigInt nb = big_pow(c.p(), c.level()) - 1;
  if (nb > BigInt(uint64_t(1) << 62)) throw TooLarge("group order too large to factor");
  uint64_t n = static_cast<uint64_t>(nb);
  std::vector<uint64_t> primes;
  uint64_t r = n;
  for (uint64_t d = 2; d * d <= r; ++d) {
    if (r % d == 0) {
      primes.push_back(d);
      while (r % d == 0) r /= d;
    }
  }
  if (r > 1) primes.push_back(r);
  uint64_t order = n;
  for (uint64_t q : primes) {
    while (order % q == 0 && c.pow(BigInt(order / q)).is_one()) order /= q;
  }
  return order;
}

}  // namespace kmr
