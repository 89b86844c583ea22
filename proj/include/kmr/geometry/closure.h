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

#ifndef KMR_GEOMETRY_CLOSURE_H_
#define KMR_GEOMETRY_CLOSURE_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "kmr/groundfield/json_io.h"

namespace kmr {

using PointSet = uint64_t;

// Finite graded lattice seen from its rank-1 nodes. below[i] is the set of
// points under node i; point p is the node point_node[p]. Node i lies under
// node j iff key[i] is a subset of key[j].
struct GradedLatticeView {
  std::vector<std::string> point_labels;
  std::vector<int> rank;
  std::vector<PointSet> below;
  std::vector<uint64_t> key;
  std::vector<std::string> node_labels;
  std::vector<size_t> point_node;

  size_t num_points() const { return point_labels.size(); }
  size_t num_nodes() const { return rank.size(); }
  // Smallest-rank node above every point of a; JoinUndefined when there is
  // none or more than one. The empty set joins to the bottom (no points).
  size_t join(PointSet a) const;
  PointSet join_points(PointSet a) const;
  // Subsets of n atoms, ranked by size.
  static GradedLatticeView boolean(size_t n);
};

// Closure operation on at most 64 points, memoized; copies share the memo.
class ClosureGeometry {
 public:
  using Fn = std::function<PointSet(PointSet)>;

  ClosureGeometry() = default;
  ClosureGeometry(std::vector<std::string> labels, Fn fn);

  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  PointSet full() const { return size() == 64 ? ~PointSet{0} : (PointSet{1} << size()) - 1; }
  PointSet cl(PointSet a) const;
  size_t index_of(const std::string& label) const;

  // cl_Y(A) = cl(A) & Y on the points of y, relabelled in order.
  ClosureGeometry restrict(PointSet y) const;
  // Distinct closures of the subsets of size at most k.
  std::vector<PointSet> closed_sets(int k) const;

  static ClosureGeometry identity(std::vector<std::string> labels);
  // cl(A) is the intersection of the listed closed sets containing A (the
  // full set is always closed).
  static ClosureGeometry from_closed_sets(std::vector<std::string> labels, std::vector<PointSet> closed);

 private:
  struct Memo {
    std::mutex mu;
    std::unordered_map<PointSet, PointSet> table;
  };
  std::vector<std::string> labels_;
  Fn fn_;
  std::shared_ptr<Memo> memo_;
};

ClosureGeometry c_construction(const GradedLatticeView& L);

std::vector<size_t> point_list(PointSet s);
PointSet point_set(const std::vector<size_t>& idx);

// {"version", "points", "closed_sets"}; closed sets as label lists, from
// the subsets of size at most k.
Json geometry_to_json(const ClosureGeometry& g, int k);
ClosureGeometry geometry_from_json(const Json& j);

}  // namespace kmr

#endif  // KMR_GEOMETRY_CLOSURE_H_
