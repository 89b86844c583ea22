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

#ifndef KMR_ABC_GROUP_H_
#define KMR_ABC_GROUP_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kmr/groundfield/json_io.h"
#include "kmr/modlinalg.h"

namespace kmr {

// (Z/ell)^n with its standard basis; subspaces are kept in reduced row
// echelon form.
using ModEllSpace = Subspace;

// Coordinates of wedge^2 (Z/ell)^n are indexed by pairs i < j in
// lexicographic order.
size_t wedge_dim(size_t n);
size_t wedge_index(size_t n, size_t i, size_t j);
std::pair<size_t, size_t> wedge_pair(size_t n, size_t k);
// Coordinates of a ^ b.
Vec wedge(const Vec& a, const Vec& b, uint32_t ell);
// The induced map wedge^2(M) for a square matrix M acting on columns.
ModMatrix wedge_square(const ModMatrix& m);
// <x, s ^ t> for x in wedge^2 of the dual, expanded as
// sum x_kl (s_k t_l - s_l t_k).
uint32_t wedge_pairing(const Vec& x, const Vec& s, const Vec& t, uint32_t ell);

// Representative of v + U that vanishes at the pivot columns of U.
Vec reduce_mod(const Subspace& u, const Vec& v);

// Quotient of a free group on rank generators by the third term of the
// mod-ell Zassenhaus filtration, further divided by the relation subspace W
// of the commutator part. Only (rank, W) is stored.
class AbcGroup {
 public:
  AbcGroup() = default;
  // ConfigError if ell is not prime or W does not live in wedge^2.
  AbcGroup(size_t rank, Subspace relations, uint32_t ell);
  static AbcGroup free(size_t rank, uint32_t ell);

  size_t rank() const { return rank_; }
  uint32_t ell() const { return ell_; }
  bool two_adic() const { return ell_ == 2; }
  const Subspace& relations() const { return w_; }
  // dim of the commutator part z0 = wedge^2 / W.
  size_t central_dim() const { return wedge_dim(rank_) - w_.dim(); }

 private:
  size_t rank_ = 0;
  uint32_t ell_ = 3;
  Subspace w_;
};

Json to_json(const AbcGroup& g);
AbcGroup abc_group_from_json(const Json& j);

// x_i^e with 0-based generator index.
using Word = std::vector<std::pair<size_t, int64_t>>;
// Parses "x1 x2^-1 x3^2" (spaces optional). BadSymbol on anything else or a
// generator outside 1..rank.
Word parse_word(const std::string& s, size_t rank);

// Element x1^a1 ... xn^an * c of G^c. central is in wedge^2 reduced modulo
// W; squares is the part outside z0 (ell = 2 only, x_i^2 terms).
struct NormalForm {
  Vec abelian;
  Vec central;
  Vec squares;
  bool operator==(const NormalForm& o) const = default;
};

NormalForm word_normal_form(const Word& w, const AbcGroup& g);
NormalForm word_normal_form(const std::string& w, const AbcGroup& g);
Json to_json(const NormalForm& f);

// [s, t] = s^-1 t^-1 s t as a class of wedge^2 / W. The quotient basis is
// the set of non-pivot coordinates of W, so value(s, t) has central_dim
// entries.
class CommutatorForm {
 public:
  explicit CommutatorForm(const AbcGroup& g);
  const AbcGroup& group() const { return g_; }
  // The quotient map wedge^2 -> wedge^2 / W as a matrix.
  const ModMatrix& quotient() const { return q_; }
  Vec value(const Vec& s, const Vec& t) const;
  // R = ker of the quotient map, recomputed from the matrix.
  Subspace kernel() const;

 private:
  AbcGroup g_;
  ModMatrix q_;
};

CommutatorForm commutator_form(const AbcGroup& g);

// Upsilon sends f in (z0)^dual to f o [.,.] in wedge^2(H^1); the columns of
// the returned matrix are the images of the dual basis of z0.
ModMatrix upsilon(const AbcGroup& g);

// Checks <Upsilon(f), s ^ t> = f([s, t]) for all dual basis f and basis
// vectors s, t. Returns the first failing triple, if any.
struct UpsilonCheck {
  bool ok = true;
  size_t f = 0, s = 0, t = 0;
  size_t checked = 0;
};
UpsilonCheck verify_upsilon(const AbcGroup& g);

}  // namespace kmr

#endif  // KMR_ABC_GROUP_H_
