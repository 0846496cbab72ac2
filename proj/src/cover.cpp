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

#include "digraph_intersect/cover.hpp"

#include <optional>
#include <string>

#include "digraph_intersect/error.hpp"
#include "digraph_intersect/matrix.hpp"
#include "digraph_intersect/transforms.hpp"

namespace digraph_intersect {

Gbs::Gbs(NodeSet tops, NodeSet bottoms) : tops_(std::move(tops)), bottoms_(std::move(bottoms)) {
  if (tops_.empty() || bottoms_.empty()) throw DomainError("GBS with an empty side");
}

ArcSet Gbs::arcs() const {
  ArcSet out;
  for (const auto& t : tops_) {
    for (const auto& b : bottoms_) out.emplace(t, b);
  }
  return out;
}

CoverReport verify_cover(const Digraph& h, const Cover& c) {
  CoverReport r;
  ArcSet covered;
  for (const auto& g : c.gbss) {
    for (const auto* side : {&g.tops(), &g.bottoms()}) {
      for (const auto& v : *side) {
        if (!h.has_vertex(v)) r.unknown_nodes.insert(v);
      }
    }
    for (auto& a : g.arcs()) {
      if (h.arcs().contains(a)) {
        covered.insert(a);
      } else {
        r.illegal_arcs.insert(std::move(a));
      }
    }
  }
  for (const auto& a : h.arcs()) {
    if (!covered.contains(a)) r.missing_arcs.insert(a);
  }
  r.valid = r.missing_arcs.empty() && r.illegal_arcs.empty() && r.unknown_nodes.empty();
  return r;
}

namespace {

// Arc-nodes at a vertex x of D. The loop arc-node (x,x) is kept apart from
// the ordinary in- and out-arcs.
struct Incidence {
  NodeSet in_arcs;
  NodeSet out_arcs;
  std::optional<NodeId> loop;

  NodeSet in_with_loop() const {
    NodeSet s = in_arcs;
    if (loop) s.insert(*loop);
    return s;
  }
  NodeSet out_with_loop() const {
    NodeSet s = out_arcs;
    if (loop) s.insert(*loop);
    return s;
  }
};

Incidence incidence(const Digraph& d, const NodeId& x) {
  Incidence inc;
  for (const auto& u : d.in_neighbors(x)) {
    if (u != x) inc.in_arcs.insert(NodeId::arc(u.label(), x.label()));
  }
  for (const auto& w : d.out_neighbors(x)) {
    if (w != x) inc.out_arcs.insert(NodeId::arc(x.label(), w.label()));
  }
  if (d.has_loop(x)) inc.loop = NodeId::arc(x.label(), x.label());
  return inc;
}

NodeSet operator+(NodeSet a, const NodeSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

NodeSet operator+(NodeSet a, const NodeId& v) {
  a.insert(v);
  return a;
}

// Empty-sided GBSs are not emitted.
void emit(Cover& c, NodeSet tops, NodeSet bottoms) {
  if (tops.empty() || bottoms.empty()) return;
  c.gbss.emplace_back(std::move(tops), std::move(bottoms));
}

void require_original(const Digraph& d) {
  for (const auto& v : d.vertices()) {
    if (!v.is_original()) {
      throw DomainError("cover constructions take original vertices only; got " +
                        v.to_string());
    }
  }
}

// Sink, source and non-loop connector GBSs shared by the T- and T covers.
// The in-star at a vertex absorbs every arc of D into it.
void emit_unlooped(Cover& c, const Digraph& d, const NodeId& x, const Incidence& inc) {
  switch (classify_vertex(d, x)) {
    case VertexClass::Isolated:
      break;
    case VertexClass::Sink:
      emit(c, inc.in_arcs + d.in_neighbors(x), {x});
      break;
    case VertexClass::Source:
      emit(c, {x}, inc.out_arcs + d.out_neighbors(x));
      break;
    case VertexClass::Connector:
      emit(c, inc.in_arcs + d.in_neighbors(x), {x});
      emit(c, inc.in_arcs + x, inc.out_arcs);
      break;
  }
}

}  // namespace

Cover subdivision_cover(const Digraph& d) {
  require_original(d);
  Cover c{subdivision(d), {}};
  for (const auto& x : d.vertices()) {
    const Incidence inc = incidence(d, x);
    emit(c, inc.in_with_loop(), {x});
    emit(c, {x}, inc.out_with_loop());
  }
  return c;
}

Cover middle_cover(const Digraph& d) {
  require_original(d);
  Cover c{middle(d), {}};
  for (const auto& x : d.vertices()) {
    const Incidence inc = incidence(d, x);
    if (inc.loop) {
      const NodeId& x2 = *inc.loop;
      emit(c, inc.in_arcs + x2, NodeSet{x, x2});
      emit(c, inc.in_arcs + x + x2, inc.out_arcs + x2);
    } else {
      emit(c, inc.in_arcs, {x});
      emit(c, inc.in_arcs + x, inc.out_arcs);
    }
  }
  return c;
}

Cover n_union_cover(const Digraph& d) {
  require_original(d);
  Cover c{n_union(d), {}};
  for (const auto& x : d.vertices()) {
    const Incidence inc = incidence(d, x);
    if (!inc.in_with_loop().empty()) emit(c, inc.in_with_loop() + d.in_neighbors(x), {x});
    if (!inc.out_with_loop().empty()) emit(c, {x}, inc.out_with_loop() + d.out_neighbors(x));
  }
  return c;
}

Cover t_minus_cover(const Digraph& d) {
  require_original(d);
  for (const auto& x : d.vertices()) {
    if (!d.has_loop(x)) continue;
    for (const auto& u : d.in_neighbors(x)) {
      if (u != x && classify_vertex(d, u) != VertexClass::Source) {
        throw DomainError("arc " + u.to_string() + " -> " + x.to_string() +
                          " into a looped vertex comes from a non-source; no "
                          "construction with 2v-A-B GBSs is known");
      }
    }
  }
  Cover c{t_minus(d), {}};
  for (const auto& x : d.vertices()) {
    const Incidence inc = incidence(d, x);
    if (inc.loop) {
      const NodeId& x2 = *inc.loop;
      emit(c, inc.in_arcs + x, inc.out_arcs + x + x2);
      emit(c, {x2}, inc.out_arcs + x);
    } else {
      emit_unlooped(c, d, x, inc);
    }
  }
  return c;
}

Cover total_cover(const Digraph& d) {
  require_original(d);
  if (auto bad = find_loop_restriction_violation(d)) {
    throw DomainError("no formula-backed construction; use oracle (loop at " +
                      bad->looped.to_string() + " touches connector " +
                      bad->neighbor.to_string() + ")");
  }
  Cover c{total(d), {}};
  for (const auto& x : d.vertices()) {
    const Incidence inc = incidence(d, x);
    if (inc.loop) {
      const NodeId& x2 = *inc.loop;
      emit(c, inc.in_arcs + x + x2, inc.out_arcs + x + x2);
    } else {
      emit_unlooped(c, d, x, inc);
    }
  }
  return c;
}

Digraph underlying_digraph(const Digraph& transformed) {
  NodeSet vs;
  std::vector<Arc> arcs;
  for (const auto& v : transformed.vertices()) {
    if (v.is_original()) vs.insert(v);
  }
  for (const auto& v : transformed.vertices()) {
    if (!v.is_arc()) continue;
    Arc a{NodeId::original(v.tail()), NodeId::original(v.head())};
    if (!vs.contains(a.first) || !vs.contains(a.second)) {
      throw DomainError("arc-node " + v.to_string() + " has no matching original vertices");
    }
    arcs.push_back(std::move(a));
  }
  return Digraph(std::vector<NodeId>(vs.begin(), vs.end()), std::move(arcs));
}

namespace {

enum class Family { Middle, NUnion };

Cover restrict_to_subdivision(const Cover& c, Family family) {
  const Digraph d = underlying_digraph(c.target);
  const bool shape_ok = family == Family::Middle ? c.target == middle(d) : c.target == n_union(d);
  if (!shape_ok) {
    throw DomainError(family == Family::Middle ? "cover target is not a middle digraph"
                                               : "cover target is not an N-union digraph");
  }
  if (!verify_cover(c.target, c).valid) throw DomainError("input cover is not valid");

  // In M(D) no arc joins two original vertices, so a GBS has originals on
  // at most one side; in N(D) the same holds for arc-nodes. The kept side
  // is the one holding that kind of node, paired with the nodes of the
  // other kind on the opposite side.
  const auto kept = family == Family::Middle ? NodeId::Kind::Original : NodeId::Kind::Arc;
  auto of_kind = [](const NodeSet& s, NodeId::Kind k) {
    NodeSet out;
    for (const auto& v : s) {
      if (v.kind() == k) out.insert(v);
    }
    return out;
  };

  Cover out{subdivision(d), {}};
  for (const auto& g : c.gbss) {
    NodeSet top_kept = of_kind(g.tops(), kept);
    NodeSet bottom_kept = of_kind(g.bottoms(), kept);
    if (!bottom_kept.empty()) {
      out.gbss.emplace_back(g.tops(), std::move(bottom_kept));
    } else if (!top_kept.empty()) {
      out.gbss.emplace_back(std::move(top_kept), g.bottoms());
    }
  }
  return out;
}

}  // namespace

Cover restrict_middle_cover(const Cover& c) { return restrict_to_subdivision(c, Family::Middle); }

Cover restrict_n_union_cover(const Cover& c) { return restrict_to_subdivision(c, Family::NUnion); }

IntersectionRepresentation representation_from_cover(const Digraph& h, const Cover& c) {
  if (!verify_cover(h, c).valid) throw DomainError("cover is not valid for the digraph");
  IntersectionRepresentation r;
  r.ground_size = c.size();
  for (const auto& v : h.vertices()) r.assignment[v];
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (const auto& v : c.gbss[k].tops()) r.assignment[v].tail_set.insert(k + 1);
    for (const auto& v : c.gbss[k].bottoms()) r.assignment[v].head_set.insert(k + 1);
  }
  return r;
}

Digraph realized_digraph(const IntersectionRepresentation& r) {
  NodeSet nodes;
  for (const auto& [v, sets] : r.assignment) {
    for (const auto* s : {&sets.tail_set, &sets.head_set}) {
      for (auto e : *s) {
        if (e < 1 || e > r.ground_size) {
          throw DomainError("element " + std::to_string(e) + " of " + v.to_string() +
                            " outside 1.." + std::to_string(r.ground_size));
        }
      }
    }
    nodes.insert(v);
  }
  const NodeIndex idx(nodes);
  const auto [tails, heads] = representation_incidence<int>(r, idx);
  const DenseMatrix<int> meets = tails * heads.transpose();
  ArcSet arcs;
  for (Eigen::Index i = 0; i < meets.rows(); ++i) {
    for (Eigen::Index j = 0; j < meets.cols(); ++j) {
      if (meets(i, j) > 0) arcs.emplace(idx.node(i), idx.node(j));
    }
  }
  return Digraph::from_sets(std::move(nodes), std::move(arcs));
}

bool verify_representation(const Digraph& h, const IntersectionRepresentation& r) {
  for (const auto& [v, sets] : r.assignment) {
    if (!h.has_vertex(v)) throw DomainError("assignment names unknown vertex " + v.to_string());
  }
  for (const auto& v : h.vertices()) {
    if (!r.assignment.contains(v)) throw DomainError("assignment misses vertex " + v.to_string());
  }
  return realized_digraph(r) == h;
}

}  // namespace digraph_intersect
