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

#include <compare>
#include <ostream>
#include <string>
#include <utility>

namespace digraph_intersect {

/// Identity of a node in a digraph or in one of its transforms.
///
/// A node is either an original vertex, named by an opaque label, or an
/// arc-node standing for the arc (tail, head) of the source digraph. The
/// same arc-node is shared by every transform of one digraph, so node sets
/// and arc sets of different transforms can be compared directly.
///
/// The ordering is canonical: every original vertex sorts before every
/// arc-node; originals compare by label and arc-nodes by (tail, head).
class NodeId {
 public:
  enum class Kind : unsigned char { Original = 0, Arc = 1 };

  static NodeId original(std::string label) {
    return NodeId(Kind::Original, std::move(label), {});
  }
  static NodeId arc(std::string tail, std::string head) {
    return NodeId(Kind::Arc, std::move(tail), std::move(head));
  }

  Kind kind() const { return kind_; }
  bool is_original() const { return kind_ == Kind::Original; }
  bool is_arc() const { return kind_ == Kind::Arc; }

  /// Label of an original vertex.
  const std::string& label() const { return first_; }
  /// Endpoints of an arc-node, as labels of the source digraph.
  const std::string& tail() const { return first_; }
  const std::string& head() const { return second_; }

  /// "a" for an original vertex, "(a,b)" for an arc-node.
  std::string to_string() const {
    return is_original() ? first_ : "(" + first_ + "," + second_ + ")";
  }

  friend auto operator<=>(const NodeId&, const NodeId&) = default;
  friend bool operator==(const NodeId&, const NodeId&) = default;

 private:
  NodeId(Kind kind, std::string first, std::string second)
      : kind_(kind), first_(std::move(first)), second_(std::move(second)) {}

  Kind kind_;
  std::string first_;
  std::string second_;
};

inline std::ostream& operator<<(std::ostream& os, const NodeId& id) {
  return os << id.to_string();
}

/// An ordered (tail, head) pair of nodes.
using Arc = std::pair<NodeId, NodeId>;

}  // namespace digraph_intersect
