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

#include "digraph_intersect/transforms.hpp"

#include "digraph_intersect/error.hpp"

namespace digraph_intersect {
namespace {

void require_original(const Digraph& d) {
  for (const auto& v : d.vertices()) {
    if (!v.is_original()) {
      throw DomainError("transform input must have original vertices only; got " +
                        v.to_string() + " (use flatten_labels)");
    }
  }
}

NodeId arc_node(const Arc& a) { return NodeId::arc(a.first.label(), a.second.label()); }

struct Parts {
  NodeSet vertices;
  ArcSet arcs;

  Digraph build() && { return Digraph::from_sets(std::move(vertices), std::move(arcs)); }
};

void add_arc_nodes(const Digraph& d, Parts& p) {
  for (const auto& a : d.arcs()) p.vertices.insert(arc_node(a));
}

void add_originals(const Digraph& d, Parts& p) {
  p.vertices.insert(d.vertices().begin(), d.vertices().end());
}

void add_subdivision_arcs(const Digraph& d, Parts& p) {
  for (const auto& a : d.arcs()) {
    const NodeId e = arc_node(a);
    p.arcs.emplace(a.first, e);
    p.arcs.emplace(e, a.second);
  }
}

void add_line_arcs(const Digraph& d, Parts& p, bool keep_loops) {
  for (const auto& a : d.arcs()) {
    for (const auto& w : d.out_neighbors(a.second)) {
      const Arc next{a.second, w};
      if (!keep_loops && next == a) continue;
      p.arcs.emplace(arc_node(a), arc_node(next));
    }
  }
}

void add_original_arcs(const Digraph& d, Parts& p) {
  p.arcs.insert(d.arcs().begin(), d.arcs().end());
}

}  // namespace

Digraph line_digraph(const Digraph& d) {
  require_original(d);
  Parts p;
  add_arc_nodes(d, p);
  add_line_arcs(d, p, true);
  return std::move(p).build();
}

Digraph subdivision(const Digraph& d) {
  require_original(d);
  Parts p;
  add_originals(d, p);
  add_arc_nodes(d, p);
  add_subdivision_arcs(d, p);
  return std::move(p).build();
}

Digraph middle(const Digraph& d) {
  require_original(d);
  Parts p;
  add_originals(d, p);
  add_arc_nodes(d, p);
  add_subdivision_arcs(d, p);
  add_line_arcs(d, p, true);
  return std::move(p).build();
}

Digraph n_union(const Digraph& d) {
  require_original(d);
  Parts p;
  add_originals(d, p);
  add_arc_nodes(d, p);
  add_subdivision_arcs(d, p);
  add_original_arcs(d, p);
  return std::move(p).build();
}

Digraph t_minus(const Digraph& d) {
  require_original(d);
  Parts p;
  add_originals(d, p);
  add_arc_nodes(d, p);
  add_subdivision_arcs(d, p);
  add_original_arcs(d, p);
  add_line_arcs(d, p, false);
  return std::move(p).build();
}

Digraph total(const Digraph& d) {
  require_original(d);
  Parts p;
  add_originals(d, p);
  add_arc_nodes(d, p);
  add_subdivision_arcs(d, p);
  add_original_arcs(d, p);
  add_line_arcs(d, p, true);
  return std::move(p).build();
}

Digraph apply_transform(TransformKind kind, const Digraph& d) {
  switch (kind) {
    case TransformKind::Identity: return d;
    case TransformKind::Line: return line_digraph(d);
    case TransformKind::Subdivision: return subdivision(d);
    case TransformKind::Middle: return middle(d);
    case TransformKind::NUnion: return n_union(d);
    case TransformKind::TMinus: return t_minus(d);
    case TransformKind::Total: return total(d);
  }
  throw DomainError("unknown transform");
}

std::string_view to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::Identity: return "identity";
    case TransformKind::Line: return "line";
    case TransformKind::Subdivision: return "subdivision";
    case TransformKind::Middle: return "middle";
    case TransformKind::NUnion: return "n";
    case TransformKind::TMinus: return "tminus";
    case TransformKind::Total: return "total";
  }
  return "?";
}

std::optional<TransformKind> parse_transform_kind(std::string_view name) {
  for (auto k : kAllTransforms) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Digraph flatten_labels(const Digraph& d) {
  auto flat = [](const NodeId& v) { return NodeId::original(v.to_string()); };
  NodeSet vs;
  ArcSet arcs;
  for (const auto& v : d.vertices()) vs.insert(flat(v));
  for (const auto& [t, h] : d.arcs()) arcs.emplace(flat(t), flat(h));
  return Digraph::from_sets(std::move(vs), std::move(arcs));
}

}  // namespace digraph_intersect
