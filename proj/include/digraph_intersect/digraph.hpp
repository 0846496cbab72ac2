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

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "digraph_intersect/node_id.hpp"

namespace digraph_intersect {

using NodeSet = std::set<NodeId>;
using ArcSet = std::set<Arc>;

/// A simple digraph: loops allowed, no parallel arcs.
///
/// Immutable once built. Vertices and arcs iterate in canonical order.
class Digraph {
 public:
  Digraph() = default;

  /// Throws DomainError on a duplicate arc or an arc whose endpoint is not
  /// listed in `vertices`. Repeated vertices are merged.
  Digraph(std::vector<NodeId> vertices, std::vector<Arc> arcs);

  /// Set-based construction; only endpoint membership is checked.
  static Digraph from_sets(NodeSet vertices, ArcSet arcs);

  /// Digraph over original vertices named by the arc endpoints plus any
  /// extra isolated labels.
  static Digraph from_labels(
      std::initializer_list<std::pair<std::string_view, std::string_view>> arcs,
      std::initializer_list<std::string_view> isolated = {});

  const NodeSet& vertices() const { return vertices_; }
  const ArcSet& arcs() const { return arcs_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }

  bool has_vertex(const NodeId& v) const { return vertices_.contains(v); }
  bool has_arc(const NodeId& tail, const NodeId& head) const {
    return arcs_.contains(Arc{tail, head});
  }
  bool has_loop(const NodeId& v) const { return has_arc(v, v); }

  /// Neighbor sets include `v` itself when it carries a loop. Unknown
  /// vertices raise DomainError.
  const NodeSet& out_neighbors(const NodeId& v) const;
  const NodeSet& in_neighbors(const NodeId& v) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.vertices_ == b.vertices_ && a.arcs_ == b.arcs_;
  }

 private:
  void index();

  NodeSet vertices_;
  ArcSet arcs_;
  std::map<NodeId, NodeSet> out_;
  std::map<NodeId, NodeSet> in_;
};

enum class VertexClass { Source, Sink, Connector, Isolated };

std::string_view to_string(VertexClass c);

/// Looped vertices are always connectors.
VertexClass classify_vertex(const Digraph& d, const NodeId& x);

/// Vertex-class counts. An isolated vertex is counted both as a sink (in
/// `sinks`) and as a source (in `sources`), so it contributes nothing to
/// 2v - A - B. `connectors` counts true connectors only, hence
/// v = sinks + sources + connectors - isolated.
struct Counts {
  std::size_t vertices = 0;    // v
  std::size_t sinks = 0;       // A
  std::size_t sources = 0;     // B
  std::size_t connectors = 0;  // C
  std::size_t loops = 0;       // L
  std::size_t isolated = 0;

  friend bool operator==(const Counts&, const Counts&) = default;
};

Counts counts(const Digraph& d);

/// 2v - A - B: the number of vertices with an in-arc plus the number with
/// an out-arc. This is the minimum GBS count of the subdivision, middle and
/// N-union digraphs.
std::size_t subdivision_intersection_number(const Digraph& d);

/// 2v - A - B - L. Only established when every loop touches nothing but
/// itself, sources and sinks; throws DomainError otherwise.
std::size_t total_intersection_number(const Digraph& d);

/// A looped vertex together with a neighbor that is neither a source nor a
/// sink.
struct LoopRestrictionViolation {
  NodeId looped;
  NodeId neighbor;
};

/// First violation of the loop restriction in canonical order, if any.
std::optional<LoopRestrictionViolation> find_loop_restriction_violation(
    const Digraph& d);

/// True iff every in- or out-neighbor of every looped vertex, other than
/// the vertex itself, is a source or a sink.
inline bool loop_restriction_holds(const Digraph& d) {
  return !find_loop_restriction_violation(d).has_value();
}

/// Same vertices, all loops removed.
Digraph delete_loops(const Digraph& d);

/// The looped vertices and their loops.
Digraph loops_subgraph(const Digraph& d);

}  // namespace digraph_intersect
