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

#include "kmr/modlinalg.h"

#include <algorithm>
#include <sstream>

namespace kmr {

uint32_t mod_reduce(int64_t a, uint32_t modulus) {
  int64_t r = a % static_cast<int64_t>(modulus);
  if (r < 0) r += modulus;
  return static_cast<uint32_t>(r);
}

uint32_t mod_inverse(uint32_t a, uint32_t modulus) {
  int64_t t = 0, new_t = 1;
  int64_t r = modulus, new_r = a % modulus;
  while (new_r != 0) {
    int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return mod_reduce(t, modulus);
}

ModMatrix::ModMatrix(size_t rows, size_t cols, uint32_t modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), a_(rows * cols, 0) {}

ModMatrix ModMatrix::identity(size_t n, uint32_t modulus) {
  ModMatrix m(n, n, modulus);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ModMatrix ModMatrix::from_rows(const std::vector<Vec>& rows, size_t cols,
                               uint32_t modulus) {
  ModMatrix m(rows.size(), cols, modulus);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c] % modulus;
  return m;
}

Vec ModMatrix::row(size_t r) const {
  return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

Vec ModMatrix::col(size_t c) const {
  Vec v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<Vec> ModMatrix::row_list() const {
  std::vector<Vec> out;
  for (size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  ModMatrix out(rows_, o.cols_, modulus_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      uint64_t a = at(i, k);
      if (a == 0) continue;
      for (size_t j = 0; j < o.cols_; ++j)
        out.at(i, j) = (out.at(i, j) + a * o.at(k, j)) % modulus_;
    }
  }
  return out;
}

Vec ModMatrix::apply(const Vec& v) const {
  Vec out(rows_, 0);
  for (size_t i = 0; i < rows_; ++i) {
    uint64_t s = 0;
    for (size_t j = 0; j < cols_; ++j) s = (s + uint64_t(at(i, j)) * v[j]) % modulus_;
    out[i] = static_cast<uint32_t>(s);
  }
  return out;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix t(cols_, rows_, modulus_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

ModMatrix ModMatrix::scaled(uint32_t s) const {
  ModMatrix out = *this;
  for (auto& x : out.a_) x = static_cast<uint32_t>(uint64_t(x) * s % modulus_);
  return out;
}

bool ModMatrix::operator==(const ModMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool ModMatrix::is_identity() const {
  return rows_ == cols_ && *this == identity(rows_, modulus_);
}

std::vector<size_t> ModMatrix::rref() {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    size_t piv = r;
    while (piv < rows_ && at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (size_t j = 0; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
    uint64_t inv = mod_inverse(at(r, c), modulus_);
    for (size_t j = 0; j < cols_; ++j) at(r, j) = static_cast<uint32_t>(at(r, j) * inv % modulus_);
    for (size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c) == 0) continue;
      uint64_t f = modulus_ - at(i, c);
      for (size_t j = c; j < cols_; ++j)
        at(i, j) = static_cast<uint32_t>((at(i, j) + f * at(r, j)) % modulus_);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t ModMatrix::rank() const {
  ModMatrix m = *this;
  return m.rref().size();
}

std::vector<Vec> ModMatrix::kernel() const {
  ModMatrix m = *this;
  std::vector<size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols_, 0);
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = (modulus_ - m.at(i, free)) % modulus_;
    out.push_back(v);
  }
  return out;
}

std::optional<ModMatrix> ModMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  size_t n = rows_;
  ModMatrix aug(n, 2 * n, modulus_);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<size_t> piv = aug.rref();
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  ModMatrix inv(n, n, modulus_);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<Vec> ModMatrix::solve(const Vec& b) const {
  ModMatrix aug(rows_, cols_ + 1, modulus_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i] % modulus_;
  }
  std::vector<size_t> piv = aug.rref();
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  Vec x(cols_, 0);
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(i, cols_);
  return x;
}

std::string ModMatrix::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    os << "]\n";
  }
  return os.str();
}

Subspace::Subspace(size_t n, uint32_t modulus) : n_(n), modulus_(modulus) {}

Subspace Subspace::span(const std::vector<Vec>& vectors, size_t n,
                        uint32_t modulus) {
  Subspace s(n, modulus);
  if (vectors.empty()) return s;
  ModMatrix m = ModMatrix::from_rows(vectors, n, modulus);
  size_t r = m.rref().size();
  for (size_t i = 0; i < r; ++i) s.basis_.push_back(m.row(i));
  return s;
}

Subspace Subspace::full(size_t n, uint32_t modulus) {
  return span(ModMatrix::identity(n, modulus).row_list(), n, modulus);
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& o) const {
  for (const Vec& v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  // basis_ is in RREF: the coordinate on row i is v at the pivot of row i.
  Vec coords(basis_.size(), 0);
  Vec rest = v;
  for (auto& x : rest) x %= modulus_;
  for (size_t i = 0; i < basis_.size(); ++i) {
    size_t p = 0;
    while (basis_[i][p] == 0) ++p;
    uint32_t c = rest[p];
    coords[i] = c;
    if (c != 0) rest = vec_sub(rest, vec_scale(basis_[i], c, modulus_), modulus_);
  }
  if (!vec_is_zero(rest)) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<Vec> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return span(all, n_, modulus_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  return perp().sum(o.perp()).perp();
}

Subspace Subspace::perp() const {
  if (basis_.empty()) return full(n_, modulus_);
  ModMatrix m = ModMatrix::from_rows(basis_, n_, modulus_);
  return span(m.kernel(), n_, modulus_);
}

std::optional<Vec> Subspace::witness_not_in(const Subspace& o) const {
  for (const Vec& v : basis_)
    if (!o.contains(v)) return v;
  return std::nullopt;
}

Vec vec_add(const Vec& a, const Vec& b, uint32_t modulus) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + b[i]) % modulus;
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b, uint32_t modulus) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = (a[i] + modulus - b[i] % modulus) % modulus;
  return out;
}

Vec vec_scale(const Vec& a, uint32_t s, uint32_t modulus) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<uint32_t>(uint64_t(a[i]) * s % modulus);
  return out;
}

uint32_t vec_dot(const Vec& a, const Vec& b, uint32_t modulus) {
  uint64_t s = 0;
  for (size_t i = 0; i < a.size(); ++i) s = (s + uint64_t(a[i]) * b[i]) % modulus;
  return static_cast<uint32_t>(s);
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t x) { return x == 0; });
}

}  // namespace kmr
