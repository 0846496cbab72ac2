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

#include "digraph_intersect/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <vector>

#include "digraph_intersect/error.hpp"

namespace digraph_intersect {

using json = nlohmann::json;

bool is_valid_label(std::string_view label) {
  return !label.empty() && std::all_of(label.begin(), label.end(), [](char ch) {
    const auto c = static_cast<unsigned char>(ch);
    return std::isalnum(c) || c == '_' || c == '.' || c == '-';
  });
}

// ---------------------------------------------------------------------------
// Edge list

Digraph parse_edge_list(std::string_view text) {
  NodeSet vertices;
  ArcSet arcs;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
    if (tokens.empty() || tokens.front().starts_with('#')) continue;

    const auto where = "line " + std::to_string(line_no) + ": ";
    if (tokens.size() > 2) throw ParseError(where + "expected '<tail> <head>' or '<label>'");
    for (const auto& t : tokens) {
      if (!is_valid_label(t)) throw ParseError(where + "invalid label '" + t + "'");
    }
    const NodeId tail = NodeId::original(tokens.front());
    vertices.insert(tail);
    if (tokens.size() == 2) {
      const NodeId head = NodeId::original(tokens[1]);
      vertices.insert(head);
      if (!arcs.emplace(tail, head).second) {
        throw ParseError(where + "duplicate arc " + tokens[0] + " -> " + tokens[1]);
      }
    }
  }
  return Digraph::from_sets(std::move(vertices), std::move(arcs));
}

std::string write_edge_list(const Digraph& d) {
  std::string out;
  for (const auto& v : d.vertices()) {
    if (!v.is_original()) throw DomainError("edge lists hold original vertices only: " + v.to_string());
    if (d.in_neighbors(v).empty() && d.out_neighbors(v).empty()) out += v.label() + "\n";
  }
  for (const auto& [t, h] : d.arcs()) out += t.label() + " " + h.label() + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// JSON writers

namespace {

json node_json(const NodeId& v) {
  if (v.is_original()) return {{"kind", "original"}, {"label", v.label()}};
  return {{"kind", "arc"}, {"tail", v.tail()}, {"head", v.head()}};
}

json nodes_json(const NodeSet& s) {
  json a = json::array();
  for (const auto& v : s) a.push_back(node_json(v));
  return a;
}

json arcs_json(const ArcSet& s) {
  json a = json::array();
  for (const auto& [t, h] : s) a.push_back(json::array({node_json(t), node_json(h)}));
  return a;
}

json digraph_json(const Digraph& d) {
  return {{"vertices", nodes_json(d.vertices())}, {"arcs", arcs_json(d.arcs())}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string write_json(const Digraph& d) { return dump(digraph_json(d)); }

std::string write_json(const Cover& c) {
  json j = digraph_json(c.target);
  json gbss = json::array();
  for (const auto& g : c.gbss) {
    gbss.push_back({{"tops", nodes_json(g.tops())}, {"bottoms", nodes_json(g.bottoms())}});
  }
  j["gbss"] = std::move(gbss);
  return dump(j);
}

std::string write_json(const IntersectionRepresentation& r) {
  json j = digraph_json(realized_digraph(r));
  j["ground_size"] = r.ground_size;
  json assignment = json::array();
  for (const auto& [v, sets] : r.assignment) {
    assignment.push_back({{"node", node_json(v)}, {"S", sets.tail_set}, {"T", sets.head_set}});
  }
  j["assignment"] = std::move(assignment);
  return dump(j);
}

std::string write_json(const CoverReport& report) {
  return dump({{"valid", report.valid},
               {"missing_arcs", arcs_json(report.missing_arcs)},
               {"illegal_arcs", arcs_json(report.illegal_arcs)},
               {"unknown_nodes", nodes_json(report.unknown_nodes)}});
}

// ---------------------------------------------------------------------------
// JSON readers

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("$: invalid JSON (") + e.what() + ")");
  }
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing \"" + key + "\"");
  return *it;
}

const json& array_at(const json& obj, const std::string& key, const std::string& path) {
  const json& a = member(obj, key, path);
  if (!a.is_array()) fail(path + "." + key, "expected an array");
  return a;
}

std::string label_at(const json& obj, const std::string& key, const std::string& path) {
  const json& s = member(obj, key, path);
  if (!s.is_string()) fail(path + "." + key, "expected a string");
  auto label = s.get<std::string>();
  if (!is_valid_label(label)) fail(path + "." + key, "invalid label '" + label + "'");
  return label;
}

NodeId node_from(const json& j, const std::string& path) {
  const json& kind = member(j, "kind", path);
  if (kind == "original") return NodeId::original(label_at(j, "label", path));
  if (kind == "arc") return NodeId::arc(label_at(j, "tail", path), label_at(j, "head", path));
  fail(path + ".kind", "expected \"original\" or \"arc\"");
}

NodeSet node_set_from(const json& a, const std::string& path) {
  NodeSet s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    if (!s.insert(node_from(a[i], p)).second) fail(p, "duplicate node");
  }
  return s;
}

Digraph digraph_from(const json& j) {
  const NodeSet vertices = node_set_from(array_at(j, "vertices", "$"), "$.vertices");
  const json& arcs = array_at(j, "arcs", "$");
  ArcSet out;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto p = "$.arcs[" + std::to_string(i) + "]";
    if (!arcs[i].is_array() || arcs[i].size() != 2) fail(p, "expected [tail, head]");
    Arc a{node_from(arcs[i][0], p + "[0]"), node_from(arcs[i][1], p + "[1]")};
    if (!vertices.contains(a.first)) fail(p + "[0]", "undeclared vertex " + a.first.to_string());
    if (!vertices.contains(a.second)) fail(p + "[1]", "undeclared vertex " + a.second.to_string());
    if (!out.insert(std::move(a)).second) fail(p, "duplicate arc");
  }
  return Digraph::from_sets(vertices, std::move(out));
}

std::set<std::size_t> elements_from(const json& a, const std::string& path, std::size_t ground) {
  if (!a.is_array()) fail(path, "expected an array");
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto p = path + "[" + std::to_string(i) + "]";
    if (!a[i].is_number_unsigned()) fail(p, "expected a positive integer");
    const auto e = a[i].get<std::size_t>();
    if (e < 1 || e > ground) fail(p, "element outside 1.." + std::to_string(ground));
    if (!s.insert(e).second) fail(p, "duplicate element");
  }
  return s;
}

}  // namespace

Digraph parse_digraph_json(std::string_view text) { return digraph_from(parse_text(text)); }

Cover parse_cover_json(std::string_view text) {
  const json j = parse_text(text);
  Cover c;
  if (j.is_object() && (j.contains("vertices") || j.contains("arcs"))) c.target = digraph_from(j);
  const json& gbss = array_at(j, "gbss", "$");
  for (std::size_t i = 0; i < gbss.size(); ++i) {
    const auto p = "$.gbss[" + std::to_string(i) + "]";
    NodeSet tops = node_set_from(array_at(gbss[i], "tops", p), p + ".tops");
    NodeSet bottoms = node_set_from(array_at(gbss[i], "bottoms", p), p + ".bottoms");
    if (tops.empty()) fail(p + ".tops", "empty side");
    if (bottoms.empty()) fail(p + ".bottoms", "empty side");
    c.gbss.emplace_back(std::move(tops), std::move(bottoms));
  }
  return c;
}

IntersectionRepresentation parse_representation_json(std::string_view text) {
  const json j = parse_text(text);
  const Digraph declared = digraph_from(j);
  const json& ground = member(j, "ground_size", "$");
  if (!ground.is_number_unsigned()) fail("$.ground_size", "expected a non-negative integer");

  IntersectionRepresentation r;
  r.ground_size = ground.get<std::size_t>();
  const json& assignment = array_at(j, "assignment", "$");
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const auto p = "$.assignment[" + std::to_string(i) + "]";
    NodeId v = node_from(member(assignment[i], "node", p), p + ".node");
    if (!declared.has_vertex(v)) fail(p + ".node", "undeclared vertex " + v.to_string());
    SetPair sets{elements_from(member(assignment[i], "S", p), p + ".S", r.ground_size),
                 elements_from(member(assignment[i], "T", p), p + ".T", r.ground_size)};
    if (!r.assignment.emplace(std::move(v), std::move(sets)).second) fail(p + ".node", "assigned twice");
  }
  if (r.assignment.size() != declared.vertex_count()) fail("$.assignment", "does not cover every vertex");
  if (realized_digraph(r) != declared) fail("$.arcs", "do not match the arcs the assignment realizes");
  return r;
}

Digraph read_digraph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = first != std::string_view::npos && text[first] == '{' ? GraphFormat::Json
                                                                     : GraphFormat::EdgeList;
  }
  return format == GraphFormat::Json ? parse_digraph_json(text) : parse_edge_list(text);
}

// ---------------------------------------------------------------------------
// DOT

namespace {

std::string quoted(const NodeId& v) { return "\"" + v.to_string() + "\""; }

std::string dot(const Digraph& h, const std::map<Arc, std::vector<std::size_t>>* labels) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& v : h.vertices()) {
    out << "  " << quoted(v) << " [shape=" << (v.is_original() ? "ellipse" : "box") << "];\n";
  }
  for (const auto& a : h.arcs()) {
    out << "  " << quoted(a.first) << " -> " << quoted(a.second);
    if (labels) {
      out << " [label=\"";
      const auto& ks = labels->at(a);
      for (std::size_t i = 0; i < ks.size(); ++i) out << (i ? "," : "") << ks[i];
      out << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const Digraph& h) { return dot(h, nullptr); }

std::string export_dot(const Digraph& h, const Cover& c) {
  if (!verify_cover(h, c).valid) throw DomainError("cover is not valid for the digraph");
  std::map<Arc, std::vector<std::size_t>> labels;
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (const auto& a : c.gbss[k].arcs()) labels[a].push_back(k + 1);
  }
  return dot(h, &labels);
}

}  // namespace digraph_intersect
