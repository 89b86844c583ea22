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

#include "kmr/abc/group.h"

#include <cctype>

#include "kmr/errors.h"

namespace kmr {

namespace {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

size_t first_nonzero(const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i]) return i;
  return v.size();
}

}  // namespace

size_t wedge_dim(size_t n) { return n * (n - (n > 0)) / 2; }

size_t wedge_index(size_t n, size_t i, size_t j) {
  if (i >= j || j >= n) throw ConfigError("wedge index needs i < j < n");
  // Pairs (0,1..n-1), (1,2..n-1), ...
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::pair<size_t, size_t> wedge_pair(size_t n, size_t k) {
  for (size_t i = 0; i + 1 < n; ++i) {
    size_t row = n - i - 1;
    if (k < row) return {i, i + 1 + k};
    k -= row;
  }
  throw ConfigError("wedge coordinate out of range");
}

Vec wedge(const Vec& a, const Vec& b, uint32_t ell) {
  size_t n = a.size();
  Vec out(wedge_dim(n), 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      int64_t v = int64_t(a[i]) * b[j] - int64_t(a[j]) * b[i];
      out[wedge_index(n, i, j)] = mod_reduce(v, ell);
    }
  return out;
}

ModMatrix wedge_square(const ModMatrix& m) {
  size_t n = m.rows();
  if (m.cols() != n) throw ConfigError("wedge_square needs a square matrix");
  uint32_t ell = m.modulus();
  size_t w = wedge_dim(n);
  ModMatrix out(w, w, ell);
  for (size_t k = 0; k < w; ++k) {
    auto [i, j] = wedge_pair(n, k);
    Vec c = wedge(m.col(i), m.col(j), ell);
    for (size_t r = 0; r < w; ++r) out.at(r, k) = c[r];
  }
  return out;
}

uint32_t wedge_pairing(const Vec& x, const Vec& s, const Vec& t, uint32_t ell) {
  size_t n = s.size();
  int64_t acc = 0;
  for (size_t k = 0; k < n; ++k)
    for (size_t l = k + 1; l < n; ++l) {
      int64_t c = x[wedge_index(n, k, l)];
      if (!c) continue;
      acc = (acc + c * mod_reduce(int64_t(s[k]) * t[l] - int64_t(s[l]) * t[k], ell)) % ell;
    }
  return static_cast<uint32_t>(acc);
}

Vec reduce_mod(const Subspace& u, const Vec& v) {
  uint32_t ell = u.modulus();
  Vec r = v;
  for (const Vec& b : u.basis()) {
    size_t p = first_nonzero(b);
    if (p == b.size() || r[p] == 0) continue;
    uint32_t c = static_cast<uint32_t>(uint64_t(r[p]) * mod_inverse(b[p], ell) % ell);
    r = vec_sub(r, vec_scale(b, c, ell), ell);
  }
  return r;
}

AbcGroup::AbcGroup(size_t rank, Subspace relations, uint32_t ell)
    : rank_(rank), ell_(ell), w_(std::move(relations)) {
  if (!is_prime(ell)) throw ConfigError("ell must be prime");
  if (rank > 32) throw ConfigError("rank above 32 is not supported");
  if (w_.ambient_dim() != wedge_dim(rank) || w_.modulus() != ell)
    throw ConfigError("relations must be a subspace of wedge^2 (Z/ell)^rank");
}

AbcGroup AbcGroup::free(size_t rank, uint32_t ell) {
  return AbcGroup(rank, Subspace(wedge_dim(rank), ell), ell);
}

Json to_json(const AbcGroup& g) {
  Json j;
  j["rank"] = g.rank();
  j["ell"] = g.ell();
  j["relations"] = g.relations().basis();
  return j;
}

AbcGroup abc_group_from_json(const Json& j) {
  try {
    size_t n = j.at("rank").get<size_t>();
    uint32_t ell = j.at("ell").get<uint32_t>();
    std::vector<Vec> rows = j.value("relations", std::vector<Vec>{});
    for (const auto& r : rows)
      if (r.size() != wedge_dim(n)) throw ConfigError("relation vector has the wrong length");
    return AbcGroup(n, Subspace::span(rows, wedge_dim(n), ell), ell);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("AbcGroup JSON: ") + e.what());
  }
}

Word parse_word(const std::string& s, size_t rank) {
  Word w;
  size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto number = [&](bool allow_sign) -> int64_t {
    bool neg = false;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw BadSymbol("expected a number at position " + std::to_string(i) + " of '" + s + "'");
    int64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i++] - '0');
      if (v > (int64_t(1) << 40)) throw BadSymbol("number too large in '" + s + "'");
    }
    return neg ? -v : v;
  };
  for (skip(); i < s.size(); skip()) {
    if (s[i] != 'x') throw BadSymbol("unexpected '" + std::string(1, s[i]) + "' in word '" + s + "'");
    ++i;
    int64_t g = number(false);
    if (g < 1 || size_t(g) > rank)
      throw BadSymbol("generator x" + std::to_string(g) + " outside x1..x" + std::to_string(rank));
    int64_t e = 1;
    skip();
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip();
      e = number(true);
    }
    w.emplace_back(size_t(g - 1), e);
  }
  return w;
}

namespace {

// Multiplies the normal form x^a c by x_i^e (e reduced, one generator at a
// time). Moving x_i left past x_k with k > i contributes a_k * [x_k, x_i].
void multiply_generator(NormalForm& f, size_t i, const AbcGroup& g) {
  uint32_t ell = g.ell();
  size_t n = g.rank();
  for (size_t k = i + 1; k < n; ++k) {
    if (!f.abelian[k]) continue;
    // x_k x_i = x_i x_k [x_k, x_i]; [x_k, x_i] = -(e_i ^ e_k).
    size_t idx = wedge_index(n, i, k);
    f.central[idx] = (f.central[idx] + ell - f.abelian[k] % ell) % ell;
  }
  if (g.two_adic() && f.abelian[i]) {
    f.abelian[i] = 0;
    f.squares[i] ^= 1;
  } else {
    f.abelian[i] = (f.abelian[i] + 1) % ell;
  }
}

}  // namespace

NormalForm word_normal_form(const Word& w, const AbcGroup& g) {
  uint32_t ell = g.ell();
  size_t n = g.rank();
  NormalForm f{Vec(n, 0), Vec(wedge_dim(n), 0), Vec(g.two_adic() ? n : 0, 0)};
  for (auto [i, e] : w) {
    if (i >= n) throw BadSymbol("generator index outside the rank");
    // x^-1 = x^(ell-1) for ell odd; for ell = 2, x^-1 = x * x^-2 and x^-2
    // is x^2 again modulo the squares of G^(2).
    if (g.two_adic()) {
      // x^e = x^(e mod 2) * (x^2)^h with the square central of order 2.
      int64_t h = e / 2;
      if (e % 2 != 0) {
        multiply_generator(f, i, g);
        h = (e - 1) / 2;
      }
      if (h % 2 != 0) f.squares[i] ^= 1;
      continue;
    }
    int64_t r = e % int64_t(ell);
    if (r < 0) r += ell;
    for (int64_t s = 0; s < r; ++s) multiply_generator(f, i, g);
  }
  f.central = reduce_mod(g.relations(), f.central);
  return f;
}

NormalForm word_normal_form(const std::string& w, const AbcGroup& g) {
  return word_normal_form(parse_word(w, g.rank()), g);
}

Json to_json(const NormalForm& f) {
  Json j;
  j["abelian"] = f.abelian;
  j["central"] = f.central;
  if (!f.squares.empty()) j["squares"] = f.squares;
  return j;
}

CommutatorForm::CommutatorForm(const AbcGroup& g) : g_(g) {
  size_t w = wedge_dim(g.rank());
  uint32_t ell = g.ell();
  std::vector<bool> pivot(w, false);
  for (const Vec& b : g.relations().basis()) pivot[first_nonzero(b)] = true;
  std::vector<size_t> free_cols;
  for (size_t k = 0; k < w; ++k)
    if (!pivot[k]) free_cols.push_back(k);
  q_ = ModMatrix(free_cols.size(), w, ell);
  for (size_t k = 0; k < w; ++k) {
    Vec e(w, 0);
    e[k] = 1;
    Vec r = reduce_mod(g.relations(), e);
    for (size_t m = 0; m < free_cols.size(); ++m) q_.at(m, k) = r[free_cols[m]];
  }
}

Vec CommutatorForm::value(const Vec& s, const Vec& t) const {
  return q_.apply(wedge(s, t, g_.ell()));
}

Subspace CommutatorForm::kernel() const {
  return Subspace::span(q_.kernel(), q_.cols(), g_.ell());
}

CommutatorForm commutator_form(const AbcGroup& g) { return CommutatorForm(g); }

ModMatrix upsilon(const AbcGroup& g) { return CommutatorForm(g).quotient().transpose(); }

UpsilonCheck verify_upsilon(const AbcGroup& g) {
  UpsilonCheck out;
  CommutatorForm form(g);
  ModMatrix ups = upsilon(g);
  size_t n = g.rank();
  uint32_t ell = g.ell();
  for (size_t f = 0; f < ups.cols(); ++f) {
    Vec x = ups.col(f);
    for (size_t s = 0; s < n; ++s)
      for (size_t t = 0; t < n; ++t) {
        Vec es(n, 0), et(n, 0);
        es[s] = 1;
        et[t] = 1;
        ++out.checked;
        if (wedge_pairing(x, es, et, ell) != form.value(es, et)[f]) {
          out.ok = false;
          out.f = f;
          out.s = s;
          out.t = t;
          return out;
        }
      }
  }
  return out;
}

}  // namespace kmr
