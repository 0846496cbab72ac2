// Copyright 2026 The digraph-intersect Authors
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

#pragma once

// Dense 0/1 matrix views of digraphs, covers and representations. Rows and
// columns follow the canonical node order of the digraph passed in.

#include <Eigen/Core>

#include <cstddef>
#include <map>
#include <vector>

#include "digraph_intersect/cover.hpp"
#include "digraph_intersect/error.hpp"

namespace digraph_intersect {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Position of every node in canonical order.
class NodeIndex {
 public:
  explicit NodeIndex(const NodeSet& nodes) : nodes_(nodes.begin(), nodes.end()) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) pos_.emplace(nodes_[i], i);
  }

  Eigen::Index size() const { return static_cast<Eigen::Index>(nodes_.size()); }
  const NodeId& node(Eigen::Index i) const { return nodes_[static_cast<std::size_t>(i)]; }

  Eigen::Index at(const NodeId& v) const {
    auto it = pos_.find(v);
    if (it == pos_.end()) throw DomainError("node not indexed: " + v.to_string());
    return static_cast<Eigen::Index>(it->second);
  }
  bool contains(const NodeId& v) const { return pos_.contains(v); }

 private:
  std::vector<NodeId> nodes_;
  std::map<NodeId, std::size_t> pos_;
};

template <typename Scalar = int>
DenseMatrix<Scalar> adjacency_matrix(const Digraph& h, const NodeIndex& idx) {
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(idx.size(), idx.size());
  for (const auto& [t, hd] : h.arcs()) a(idx.at(t), idx.at(hd)) = Scalar(1);
  return a;
}

/// Node-by-GBS incidence of the tops (first) and bottoms (second) sides.
/// The product tops * bottoms^T counts, per node pair, the GBSs that
/// contain that pair as an arc.
template <typename Scalar = int>
std::pair<DenseMatrix<Scalar>, DenseMatrix<Scalar>> cover_incidence(
    const Cover& c, const NodeIndex& idx) {
  const auto k = static_cast<Eigen::Index>(c.size());
  DenseMatrix<Scalar> tops = DenseMatrix<Scalar>::Zero(idx.size(), k);
  DenseMatrix<Scalar> bottoms = DenseMatrix<Scalar>::Zero(idx.size(), k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const Gbs& g = c.gbss[static_cast<std::size_t>(j)];
    for (const auto& v : g.tops()) tops(idx.at(v), j) = Scalar(1);
    for (const auto& v : g.bottoms()) bottoms(idx.at(v), j) = Scalar(1);
  }
  return {std::move(tops), std::move(bottoms)};
}

/// Node-by-element incidence of the tail sets (first) and head sets
/// (second). Element e occupies column e-1.
template <typename Scalar = int>
std::pair<DenseMatrix<Scalar>, DenseMatrix<Scalar>> representation_incidence(
    const IntersectionRepresentation& r, const NodeIndex& idx) {
  const auto g = static_cast<Eigen::Index>(r.ground_size);
  DenseMatrix<Scalar> tails = DenseMatrix<Scalar>::Zero(idx.size(), g);
  DenseMatrix<Scalar> heads = DenseMatrix<Scalar>::Zero(idx.size(), g);
  for (const auto& [v, sets] : r.assignment) {
    const auto row = idx.at(v);
    for (auto e : sets.tail_set) tails(row, static_cast<Eigen::Index>(e) - 1) = Scalar(1);
    for (auto e : sets.head_set) heads(row, static_cast<Eigen::Index>(e) - 1) = Scalar(1);
  }
  return {std::move(tails), std::move(heads)};
}

/// Entry (v, x) of A A^T A counts the walks v->w<-u->x. The digraph is
/// closed under v->w, u->w, u->x => v->x exactly when this product has no
/// support outside A.
template <typename Scalar = int>
bool heuchenne_closed(const DenseMatrix<Scalar>& a) {
  const DenseMatrix<Scalar> walks = a * a.transpose() * a;
  return ((walks.array() > Scalar(0)) && (a.array() == Scalar(0))).count() == 0;
}

}  // namespace digraph_intersect
