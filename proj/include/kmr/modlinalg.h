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

#ifndef KMR_MODLINALG_H_
#define KMR_MODLINALG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kmr {

using Vec = std::vector<uint32_t>;

uint32_t mod_inverse(uint32_t a, uint32_t modulus);
uint32_t mod_reduce(int64_t a, uint32_t modulus);

// Dense row-major matrix over Z/modulus for a prime modulus.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(size_t rows, size_t cols, uint32_t modulus);
  static ModMatrix identity(size_t n, uint32_t modulus);
  static ModMatrix from_rows(const std::vector<Vec>& rows, size_t cols,
                             uint32_t modulus);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint32_t modulus() const { return modulus_; }

  uint32_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
  Vec row(size_t r) const;
  Vec col(size_t c) const;
  std::vector<Vec> row_list() const;

  ModMatrix operator*(const ModMatrix& o) const;
  Vec apply(const Vec& v) const;  // M * v
  ModMatrix transpose() const;
  ModMatrix scaled(uint32_t s) const;
  bool operator==(const ModMatrix& o) const;
  bool is_identity() const;

  // Reduced row echelon form in place; returns pivot columns.
  std::vector<size_t> rref();
  size_t rank() const;
  // Basis (as rows) of {x : M x = 0}.
  std::vector<Vec> kernel() const;
  std::optional<ModMatrix> inverse() const;
  // Some x with M x = b, if one exists.
  std::optional<Vec> solve(const Vec& b) const;

  std::string to_string() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  uint32_t modulus_ = 2;
  std::vector<uint32_t> a_;
};

// Subspace of (Z/modulus)^n stored as a reduced row echelon basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(size_t n, uint32_t modulus);
  static Subspace span(const std::vector<Vec>& vectors, size_t n,
                       uint32_t modulus);
  static Subspace full(size_t n, uint32_t modulus);

  size_t ambient_dim() const { return n_; }
  size_t dim() const { return basis_.size(); }
  uint32_t modulus() const { return modulus_; }
  const std::vector<Vec>& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  // Annihilator under the standard dot product.
  Subspace perp() const;
  // Coordinates of v in this basis, if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;
  // A vector in this space that is not in o, if any.
  std::optional<Vec> witness_not_in(const Subspace& o) const;

 private:
  size_t n_ = 0;
  uint32_t modulus_ = 2;
  std::vector<Vec> basis_;
};

Vec vec_add(const Vec& a, const Vec& b, uint32_t modulus);
Vec vec_sub(const Vec& a, const Vec& b, uint32_t modulus);
Vec vec_scale(const Vec& a, uint32_t s, uint32_t modulus);
uint32_t vec_dot(const Vec& a, const Vec& b, uint32_t modulus);
bool vec_is_zero(const Vec& a);

}  // namespace kmr

#endif  // KMR_MODLINALG_H_
