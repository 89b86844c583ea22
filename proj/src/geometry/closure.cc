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

#include "kmr/geometry/closure.h"

#include <algorithm>
#include <bit>
#include <set>

#include "kmr/errors.h"

namespace kmr {

std::vector<size_t> point_list(PointSet s) {
  std::vector<size_t> out;
  for (size_t i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

PointSet point_set(const std::vector<size_t>& idx) {
  PointSet s = 0;
  for (size_t i : idx) s |= PointSet{1} << i;
  return s;
}

size_t GradedLatticeView::join(PointSet a) const {
  std::optional<size_t> best;
  bool ambiguous = false;
  for (size_t i = 0; i < num_nodes(); ++i) {
    if ((below[i] & a) != a) continue;
    if (!best || rank[i] < rank[*best]) {
      best = i;
      ambiguous = false;
    } else if (rank[i] == rank[*best]) {
      ambiguous = true;
    }
  }
  auto names = [&] {
    std::string s;
    for (size_t p : point_list(a)) s += (s.empty() ? "" : ", ") + point_labels[p];
    return "{" + s + "}";
  };
  if (!best) throw JoinUndefined("no node lies above " + names());
  if (ambiguous) throw JoinUndefined("the join of " + names() + " is not unique in the fragment");
  return *best;
}

PointSet GradedLatticeView::join_points(PointSet a) const {
  if (!a) return 0;
  return below[join(a)];
}

GradedLatticeView GradedLatticeView::boolean(size_t n) {
  if (n > 16) throw ConfigError("boolean lattice too large");
  GradedLatticeView v;
  for (size_t i = 0; i < n; ++i) v.point_labels.push_back("a" + std::to_string(i + 1));
  v.point_node.resize(n);
  for (PointSet s = 1; s < (PointSet{1} << n); ++s) {
    if (std::popcount(s) == 1) v.point_node[std::countr_zero(s)] = v.rank.size();
    v.rank.push_back(std::popcount(s));
    v.below.push_back(s);
    v.key.push_back(s);
    v.node_labels.push_back("n" + std::to_string(s));
  }
  return v;
}

ClosureGeometry::ClosureGeometry(std::vector<std::string> labels, Fn fn)
    : labels_(std::move(labels)), fn_(std::move(fn)), memo_(std::make_shared<Memo>()) {
  if (labels_.size() > 64) throw ConfigError("geometries are limited to 64 points");
}

PointSet ClosureGeometry::cl(PointSet a) const {
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->table.find(a);
    if (it != memo_->table.end()) return it->second;
  }
  PointSet c = fn_(a);
  std::lock_guard<std::mutex> lock(memo_->mu);
  memo_->table.emplace(a, c);
  return c;
}

size_t ClosureGeometry::index_of(const std::string& label) const {
  for (size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  throw ConfigError("unknown point " + label);
}

ClosureGeometry ClosureGeometry::restrict(PointSet y) const {
  if ((y & full()) != y) throw ConfigError("restriction to points outside the geometry");
  std::vector<size_t> idx = point_list(y);
  std::vector<std::string> labels;
  for (size_t i : idx) labels.push_back(labels_[i]);
  ClosureGeometry parent = *this;
  return ClosureGeometry(labels, [parent, idx](PointSet a) {
    PointSet up = 0;
    for (size_t k = 0; k < idx.size(); ++k)
      if (a >> k & 1) up |= PointSet{1} << idx[k];
    PointSet c = parent.cl(up), out = 0;
    for (size_t k = 0; k < idx.size(); ++k)
      if (c >> idx[k] & 1) out |= PointSet{1} << k;
    return out;
  });
}

std::vector<PointSet> ClosureGeometry::closed_sets(int k) const {
  std::set<PointSet> out;
  size_t n = size();
  std::vector<size_t> stack;
  std::function<void(size_t, PointSet)> rec = [&](size_t start, PointSet cur) {
    out.insert(cl(cur));
    if (std::popcount(cur) == k) return;
    for (size_t i = start; i < n; ++i) rec(i + 1, cur | (PointSet{1} << i));
  };
  rec(0, 0);
  return {out.begin(), out.end()};
}

ClosureGeometry ClosureGeometry::identity(std::vector<std::string> labels) {
  return ClosureGeometry(std::move(labels), [](PointSet a) { return a; });
}

ClosureGeometry ClosureGeometry::from_closed_sets(std::vector<std::string> labels, std::vector<PointSet> closed) {
  PointSet all = labels.size() == 64 ? ~PointSet{0} : (PointSet{1} << labels.size()) - 1;
  return ClosureGeometry(std::move(labels), [closed, all](PointSet a) {
    PointSet c = all;
    for (PointSet s : closed)
      if ((s & a) == a) c &= s;
    return c;
  });
}

ClosureGeometry c_construction(const GradedLatticeView& L) {
  GradedLatticeView view = L;
  return ClosureGeometry(L.point_labels, [view](PointSet a) { return view.join_points(a); });
}

Json geometry_to_json(const ClosureGeometry& g, int k) {
  Json closed = Json::array();
  for (PointSet s : g.closed_sets(k)) {
    Json c = Json::array();
    for (size_t p : point_list(s)) c.push_back(g.labels()[p]);
    closed.push_back(c);
  }
  return Json{{"version", 1}, {"points", g.labels()}, {"closed_sets", closed}};
}

ClosureGeometry geometry_from_json(const Json& j) {
  auto labels = j.at("points").get<std::vector<std::string>>();
  ClosureGeometry tmp = ClosureGeometry::identity(labels);
  std::vector<PointSet> closed;
  for (const auto& c : j.at("closed_sets")) {
    PointSet s = 0;
    for (const auto& l : c) s |= PointSet{1} << tmp.index_of(l.get<std::string>());
    closed.push_back(s);
  }
  return ClosureGeometry::from_closed_sets(labels, closed);
}

}  // namespace kmr
