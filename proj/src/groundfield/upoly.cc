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

#include <algorithm>
#include <numeric>

#include "kmr/groundfield/field_ctx.h"
#include "kmr/modlinalg.h"

namespace kmr {

BigInt big_pow(uint64_t base, uint64_t exp) {
  BigInt r = 1;
  for (uint64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

FieldCtx::FieldCtx(uint32_t p, Raw modulus)
    : p_(p), m_(static_cast<uint32_t>(modulus.size() - 1)), mod_(std::move(modulus)) {}

Raw FieldCtx::one() const {
  Raw r(m_, 0);
  r[0] = 1;
  return r;
}

Raw FieldCtx::from_int(int64_t c) const {
  Raw r(m_, 0);
  r[0] = mod_reduce(c, p_);
  return r;
}

Raw FieldCtx::generator() const {
  if (m_ == 1) return Raw{mod_reduce(-static_cast<int64_t>(mod_[0]), p_)};
  Raw r(m_, 0);
  r[1] = 1;
  return r;
}

bool FieldCtx::is_zero(const Raw& a) const {
  return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

bool FieldCtx::is_one(const Raw& a) const {
  if (a[0] != 1) return false;
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i]) return false;
  return true;
}

Raw FieldCtx::add(const Raw& a, const Raw& b) const {
  Raw r(m_);
  for (uint32_t i = 0; i < m_; ++i) {
    uint32_t s = a[i] + b[i];
    r[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

Raw FieldCtx::sub(const Raw& a, const Raw& b) const {
  Raw r(m_);
  for (uint32_t i = 0; i < m_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
  return r;
}

Raw FieldCtx::neg(const Raw& a) const {
  Raw r(m_);
  for (uint32_t i = 0; i < m_; ++i) r[i] = a[i] ? p_ - a[i] : 0;
  return r;
}

Raw FieldCtx::scale(const Raw& a, uint32_t c) const {
  Raw r(m_);
  for (uint32_t i = 0; i < m_; ++i) r[i] = static_cast<uint32_t>(uint64_t(a[i]) * c % p_);
  return r;
}

Raw FieldCtx::mul(const Raw& a, const Raw& b) const {
  if (m_ == 1) return Raw{static_cast<uint32_t>(uint64_t(a[0]) * b[0] % p_)};
  std::vector<uint64_t> t(2 * m_ - 1, 0);
  for (uint32_t i = 0; i < m_; ++i) {
    if (!a[i]) continue;
    uint64_t ai = a[i];
    for (uint32_t j = 0; j < m_; ++j) t[i + j] = (t[i + j] + ai * b[j]) % p_;
  }
  for (size_t i = t.size() - 1; i >= m_; --i) {
    uint64_t c = t[i] % p_;
    if (!c) continue;
    uint64_t nc = p_ - c;
    for (uint32_t j = 0; j < m_; ++j) t[i - m_ + j] = (t[i - m_ + j] + nc * mod_[j]) % p_;
  }
  Raw r(m_);
  for (uint32_t i = 0; i < m_; ++i) r[i] = static_cast<uint32_t>(t[i] % p_);
  return r;
}

namespace {

// Polynomials over F_p as coefficient vectors, used for inversion.
void fp_trim(Raw& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Raw fp_sub_mul(const Raw& a, const Raw& q, const Raw& b, uint32_t p) {
  // a - q*b
  Raw r = a;
  size_t need = q.empty() || b.empty() ? 0 : q.size() + b.size() - 1;
  if (r.size() < need) r.resize(need, 0);
  for (size_t i = 0; i < q.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(p - q[i]) * b[j]) % p);
  fp_trim(r);
  return r;
}

std::pair<Raw, Raw> fp_divmod(Raw a, const Raw& b, uint32_t p) {
  fp_trim(a);
  Raw q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  uint64_t inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    size_t shift = a.size() - b.size();
    uint64_t c = a.back() * inv % p;
    q[shift] = static_cast<uint32_t>(c);
    for (size_t j = 0; j < b.size(); ++j)
      a[shift + j] = static_cast<uint32_t>((a[shift + j] + (p - c) * b[j]) % p);
    fp_trim(a);
  }
  return {q, a};
}

}  // namespace

Raw FieldCtx::inv(const Raw& a) const {
  if (m_ == 1) return Raw{mod_inverse(a[0], p_)};
  Raw r0 = mod_, r1 = a;
  fp_trim(r1);
  Raw s0, s1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p_);
    Raw s2 = fp_sub_mul(s0, q, s1, p_);
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
  }
  // r0 is a nonzero constant.
  uint64_t c = mod_inverse(r0[0], p_);
  Raw out(m_, 0);
  for (size_t i = 0; i < s0.size() && i < m_; ++i) out[i] = static_cast<uint32_t>(s0[i] * c % p_);
  return out;
}

Raw FieldCtx::pow(const Raw& a, const BigInt& e) const {
  Raw result = one();
  if (e == 0) return result;
  unsigned top = boost::multiprecision::msb(e);
  for (int i = static_cast<int>(top); i >= 0; --i) {
    result = mul(result, result);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mul(result, a);
  }
  return result;
}

Raw FieldCtx::random(std::mt19937_64& rng) const {
  Raw r(m_);
  for (auto& c : r) c = static_cast<uint32_t>(rng() % p_);
  return r;
}

namespace upoly {

void trim(const FieldCtx& f, UPoly& a) {
  while (!a.empty() && f.is_zero(a.back())) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly x_poly(const FieldCtx& f) { return UPoly{f.zero(), f.one()}; }

UPoly constant(const FieldCtx& f, const Raw& c) {
  UPoly r{c};
  trim(f, r);
  return r;
}

UPoly add(const FieldCtx& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), f.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

UPoly sub(const FieldCtx& f, const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), f.zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

UPoly mul(const FieldCtx& f, const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, f.zero());
  for (size_t i = 0; i < a.size(); ++i) {
    if (f.is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(f, r);
  return r;
}

UPoly scale(const FieldCtx& f, const UPoly& a, const Raw& c) {
  UPoly r;
  r.reserve(a.size());
  for (const Raw& x : a) r.push_back(f.mul(x, c));
  trim(f, r);
  return r;
}

std::pair<UPoly, UPoly> divmod(const FieldCtx& f, const UPoly& a, const UPoly& b) {
  UPoly rem = a;
  trim(f, rem);
  if (rem.size() < b.size()) return {{}, rem};
  UPoly q(rem.size() - b.size() + 1, f.zero());
  Raw inv = f.inv(b.back());
  while (rem.size() >= b.size() && !rem.empty()) {
    size_t shift = rem.size() - b.size();
    Raw c = f.mul(rem.back(), inv);
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) rem[shift + j] = f.sub(rem[shift + j], f.mul(c, b[j]));
    rem.pop_back();
    trim(f, rem);
  }
  trim(f, q);
  return {q, rem};
}

UPoly mod(const FieldCtx& f, const UPoly& a, const UPoly& b) { return divmod(f, a, b).second; }

UPoly mulmod(const FieldCtx& f, const UPoly& a, const UPoly& b, const UPoly& m) {
  return mod(f, mul(f, a, b), m);
}

UPoly powmod(const FieldCtx& f, const UPoly& a, const BigInt& e, const UPoly& m) {
  UPoly result = mod(f, constant(f, f.one()), m);
  if (e == 0) return result;
  UPoly base = mod(f, a, m);
  unsigned top = boost::multiprecision::msb(e);
  for (int i = static_cast<int>(top); i >= 0; --i) {
    result = mulmod(f, result, result, m);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mulmod(f, result, base, m);
  }
  return result;
}

UPoly compose_mod(const FieldCtx& f, const UPoly& a, const UPoly& b, const UPoly& m) {
  UPoly r;
  for (size_t i = a.size(); i-- > 0;) {
    r = mulmod(f, r, b, m);
    r = add(f, r, constant(f, a[i]));
  }
  return mod(f, r, m);
}

UPoly monic(const FieldCtx& f, const UPoly& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

UPoly gcd(const FieldCtx& f, UPoly a, UPoly b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    UPoly r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Raw eval(const FieldCtx& f, const UPoly& a, const Raw& x) {
  Raw r = f.zero();
  for (size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
  return r;
}

namespace {

void split_rec(const FieldCtx& f, const UPoly& g, std::mt19937_64& rng,
               const BigInt& half, std::vector<Raw>& out) {
  int d = degree(g);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back(f.neg(f.mul(g[0], f.inv(g[1]))));
    return;
  }
  for (;;) {
    Raw a = f.random(rng);
    UPoly h;
    if (f.p() == 2) {
      UPoly s = mod(f, UPoly{f.zero(), a}, g);
      if (s.empty()) continue;
      UPoly acc = s;
      for (uint32_t k = 1; k < f.degree(); ++k) {
        s = mulmod(f, s, s, g);
        acc = add(f, acc, s);
      }
      h = acc;
    } else {
      UPoly base{a, f.one()};
      h = sub(f, powmod(f, base, half, g), constant(f, f.one()));
    }
    UPoly c = gcd(f, g, h);
    int dc = degree(c);
    if (dc > 0 && dc < d) {
      split_rec(f, c, rng, half, out);
      split_rec(f, divmod(f, g, c).first, rng, half, out);
      return;
    }
  }
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

std::vector<Raw> split_roots(const FieldCtx& f, const UPoly& g, std::mt19937_64& rng) {
  std::vector<Raw> out;
  BigInt half = (f.order() - 1) / 2;
  split_rec(f, monic(f, g), rng, half, out);
  return out;
}

std::vector<int> factor_degrees(const FieldCtx& f, const UPoly& g) {
  std::vector<int> degs;
  UPoly rem = monic(f, g);
  UPoly x = x_poly(f);
  if (degree(rem) <= 0) return degs;
  UPoly frob = powmod(f, x, f.order(), rem);  // x^q mod rem
  UPoly cur = frob;
  for (int j = 1; degree(rem) >= j; ++j) {
    UPoly c = gcd(f, rem, sub(f, cur, mod(f, x, rem)));
    if (degree(c) > 0) {
      degs.push_back(j);
      for (;;) {
        auto [q, r] = divmod(f, rem, c);
        if (!r.empty()) break;
        rem = q;
      }
      // Remove any remaining powers of the degree-j factors.
      for (;;) {
        UPoly c2 = gcd(f, rem, c);
        if (degree(c2) <= 0) break;
        rem = divmod(f, rem, c2).first;
      }
      if (degree(rem) <= 0) break;
      frob = mod(f, frob, rem);
      cur = mod(f, cur, rem);
    }
    cur = compose_mod(f, cur, frob, rem);
  }
  return degs;
}

bool is_irreducible(const FieldCtx& f, const UPoly& g) {
  int n = degree(g);
  if (n <= 0) return false;
  if (n == 1) return true;
  UPoly m = monic(f, g);
  UPoly x = x_poly(f);
  UPoly frob = powmod(f, x, f.order(), m);
  std::vector<UPoly> pw(n + 1);
  pw[1] = frob;
  for (int j = 2; j <= n; ++j) pw[j] = compose_mod(f, pw[j - 1], frob, m);
  if (!sub(f, pw[n], x).empty()) return false;
  for (int q : prime_factors(n)) {
    UPoly c = gcd(f, m, sub(f, pw[n / q], x));
    if (degree(c) > 0) return false;
  }
  return true;
}

}  // namespace upoly
}  // namespace kmr
