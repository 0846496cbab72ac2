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

#include "digraph_intersect/digraph.hpp"

#include "digraph_intersect/error.hpp"

namespace digraph_intersect {

Digraph::Digraph(std::vector<NodeId> vertices, std::vector<Arc> arcs) {
  vertices_.insert(std::make_move_iterator(vertices.begin()),
                   std::make_move_iterator(vertices.end()));
  for (auto& a : arcs) {
    if (!vertices_.contains(a.first) || !vertices_.contains(a.second)) {
      throw DomainError("arc " + a.first.to_string() + " -> " +
                        a.second.to_string() + " has an endpoint not in the digraph");
    }
    if (arcs_.contains(a)) {
      throw DomainError("duplicate arc " + a.first.to_string() + " -> " +
                        a.second.to_string());
    }
    arcs_.insert(std::move(a));
  }
  index();
}

Digraph Digraph::from_sets(NodeSet vertices, ArcSet arcs) {
  Digraph d;
  d.vertices_ = std::move(vertices);
  d.arcs_ = std::move(arcs);
  for (const auto& [t, h] : d.arcs_) {
    if (!d.vertices_.contains(t) || !d.vertices_.contains(h)) {
      throw DomainError("arc " + t.to_string() + " -> " + h.to_string() +
                        " has an endpoint not in the digraph");
    }
  }
  d.index();
  return d;
}

Digraph Digraph::from_labels(
    std::initializer_list<std::pair<std::string_view, std::string_view>> arcs,
    std::initializer_list<std::string_view> isolated) {
  std::vector<NodeId> vs;
  std::vector<Arc> as;
  for (auto [t, h] : arcs) {
    vs.push_back(NodeId::original(std::string(t)));
    vs.push_back(NodeId::original(std::string(h)));
    as.emplace_back(vs[vs.size() - 2], vs.back());
  }
  for (auto v : isolated) vs.push_back(NodeId::original(std::string(v)));
  return Digraph(std::move(vs), std::move(as));
}

void Digraph::index() {
  out_.clear();
  in_.clear();
  for (const auto& v : vertices_) {
    out_.try_emplace(v);
    in_.try_emplace(v);
  }
  for (const auto& [t, h] : arcs_) {
    out_[t].insert(h);
    in_[h].insert(t);
  }
}

const NodeSet& Digraph::out_neighbors(const NodeId& v) const {
  auto it = out_.find(v);
  if (it == out_.end()) throw DomainError("vertex not in digraph: " + v.to_string());
  return it->second;
}

const NodeSet& Digraph::in_neighbors(const NodeId& v) const {
  auto it = in_.find(v);
  if (it == in_.end()) throw DomainError("vertex not in digraph: " + v.to_string());
  return it->second;
}

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Source: return "source";
    case VertexClass::Sink: return "sink";
    case VertexClass::Connector: return "connector";
    case VertexClass::Isolated: return "isolated";
  }
  return "?";
}

VertexClass classify_vertex(const Digraph& d, const NodeId& x) {
  const auto& out = d.out_neighbors(x);
  const auto& in = d.in_neighbors(x);
  if (out.contains(x)) return VertexClass::Connector;
  if (out.empty() && in.empty()) return VertexClass::Isolated;
  if (out.empty()) return VertexClass::Sink;
  if (in.empty()) return VertexClass::Source;
  return VertexClass::Connector;
}

Counts counts(const Digraph& d) {
  Counts c;
  c.vertices = d.vertex_count();
  for (const auto& v : d.vertices()) {
    switch (classify_vertex(d, v)) {
      case VertexClass::Sink: ++c.sinks; break;
      case VertexClass::Source: ++c.sources; break;
      case VertexClass::Connector: ++c.connectors; break;
      case VertexClass::Isolated:
        ++c.isolated;
        ++c.sinks;
        ++c.sources;
        break;
    }
    if (d.has_loop(v)) ++c.loops;
  }
  return c;
}

std::size_t subdivision_intersection_number(const Digraph& d) {
  const Counts c = counts(d);
  return 2 * c.vertices - c.sinks - c.sources;
}

std::size_t total_intersection_number(const Digraph& d) {
  if (auto bad = find_loop_restriction_violation(d)) {
    throw DomainError("formula not established; use oracle (loop at " +
                      bad->looped.to_string() + " touches connector " +
                      bad->neighbor.to_string() + ")");
  }
  const Counts c = counts(d);
  return 2 * c.vertices - c.sinks - c.sources - c.loops;
}

std::optional<LoopRestrictionViolation> find_loop_restriction_violation(
    const Digraph& d) {
  for (const auto& l : d.vertices()) {
    if (!d.has_loop(l)) continue;
    NodeSet touching = d.in_neighbors(l);
    touching.insert(d.out_neighbors(l).begin(), d.out_neighbors(l).end());
    for (const auto& n : touching) {
      if (n == l) continue;
      const VertexClass c = classify_vertex(d, n);
      if (c != VertexClass::Source && c != VertexClass::Sink) {
        return LoopRestrictionViolation{l, n};
      }
    }
  }
  return std::nullopt;
}

Digraph delete_loops(const Digraph& d) {
  ArcSet arcs;
  for (const auto& a : d.arcs()) {
    if (a.first != a.second) arcs.insert(a);
  }
  return Digraph::from_sets(d.vertices(), std::move(arcs));
}

Digraph loops_subgraph(const Digraph& d) {
  NodeSet vs;
  ArcSet arcs;
  for (const auto& v : d.vertices()) {
    if (d.has_loop(v)) {
      vs.insert(v);
      arcs.emplace(v, v);
    }
  }
  return Digraph::from_sets(std::move(vs), std::move(arcs));
}

}  // namespace digraph_intersect
