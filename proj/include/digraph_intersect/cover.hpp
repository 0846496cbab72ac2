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
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "digraph_intersect/digraph.hpp"

namespace digraph_intersect {

/// Generalized complete bipartite subdigraph: every arc from a node of
/// `tops` to a node of `bottoms`. The two sides may share nodes, which
/// means loops at the shared nodes.
class Gbs {
 public:
  /// Throws DomainError if either side is empty.
  Gbs(NodeSet tops, NodeSet bottoms);

  const NodeSet& tops() const { return tops_; }
  const NodeSet& bottoms() const { return bottoms_; }

  std::size_t arc_count() const { return tops_.size() * bottoms_.size(); }
  bool contains(const NodeId& tail, const NodeId& head) const {
    return tops_.contains(tail) && bottoms_.contains(head);
  }
  ArcSet arcs() const;

  friend auto operator<=>(const Gbs&, const Gbs&) = default;
  friend bool operator==(const Gbs&, const Gbs&) = default;

 private:
  NodeSet tops_;
  NodeSet bottoms_;
};

/// A list of GBSs meant to cover the arcs of `target`. Order matters only
/// for the intersection representation: GBS k becomes ground element k+1.
struct Cover {
  Digraph target;
  std::vector<Gbs> gbss;

  std::size_t size() const { return gbss.size(); }
  friend bool operator==(const Cover&, const Cover&) = default;
};

struct CoverReport {
  bool valid = false;
  ArcSet missing_arcs;   // arcs of the digraph no GBS covers
  ArcSet illegal_arcs;   // GBS arcs that are not arcs of the digraph
  NodeSet unknown_nodes; // GBS nodes that are not vertices of the digraph
};

CoverReport verify_cover(const Digraph& h, const Cover& c);

/// Minimum cover of S(D): an in-star and an out-star at every vertex that
/// has in- resp. out-arcs. Size 2v - A - B.
Cover subdivision_cover(const Digraph& d);

/// Minimum cover of M(D), size 2v - A - B. At a looped vertex the loop
/// arc-node joins both GBSs.
Cover middle_cover(const Digraph& d);

/// Minimum cover of N(D), size 2v - A - B: the subdivision stars grown
/// with the arcs of D.
Cover n_union_cover(const Digraph& d);

/// Cover of T-(D) with 2v - A - B GBSs. The construction needs every
/// in-neighbor of a looped vertex (other than itself) to be a source, which
/// the loop restriction implies; throws DomainError naming the uncovered
/// arc otherwise.
Cover t_minus_cover(const Digraph& d);

/// Cover of T(D) with 2v - A - B - L GBSs; each looped vertex needs a single
/// GBS. Throws DomainError if the loop restriction fails.
Cover total_cover(const Digraph& d);

/// Recovers D from a transform of D: the original vertices, plus an arc
/// (t,h) for every arc-node (t,h).
Digraph underlying_digraph(const Digraph& transformed);

/// Turns a valid cover of M(D) into a cover of S(D) that is no larger: GBSs
/// without original vertices are dropped, and each survivor keeps only the
/// arcs between its original vertices and its arc-nodes. Throws
/// DomainError if `c` is not a valid cover of a middle digraph.
Cover restrict_middle_cover(const Cover& c);

/// Same for a cover of N(D): GBSs without arc-nodes are dropped.
Cover restrict_n_union_cover(const Cover& c);

/// Per-node pair of subsets of {1..ground_size}; x -> y is realized iff
/// tail_set(x) and head_set(y) intersect.
struct SetPair {
  std::set<std::size_t> tail_set;
  std::set<std::size_t> head_set;
  friend bool operator==(const SetPair&, const SetPair&) = default;
};

struct IntersectionRepresentation {
  std::size_t ground_size = 0;
  std::map<NodeId, SetPair> assignment;
  friend bool operator==(const IntersectionRepresentation&,
                         const IntersectionRepresentation&) = default;
};

/// Ground element k (1-based) is GBS k-1: it joins the tail set of its tops
/// and the head set of its bottoms. Throws DomainError on an invalid cover.
IntersectionRepresentation representation_from_cover(const Digraph& h, const Cover& c);

/// The digraph realized by `r` over its assigned nodes.
Digraph realized_digraph(const IntersectionRepresentation& r);

/// True iff `r` realizes exactly `h`. Throws DomainError if the assignment
/// names a node outside `h`, misses a node of `h`, or uses an element
/// outside {1..ground_size}.
bool verify_representation(const Digraph& h, const IntersectionRepresentation& r);

}  // namespace digraph_intersect
