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

// Text formats.
//
// Edge list: one "<tail> <head>" arc per line, a lone "<label>" declares a
// vertex, "#" starts a comment line. Labels match [A-Za-z0-9_.-]+.
//
// JSON: {"vertices": [node...], "arcs": [[node, node]...]} where a node is
// {"kind": "original", "label": ...} or {"kind": "arc", "tail": ..., "head": ...}.
// Cover documents add "gbss": [{"tops": [node...], "bottoms": [node...]}...];
// representation documents add "ground_size" and
// "assignment": [{"node": node, "S": [int...], "T": [int...]}...].
//
// Writers are canonical: equal values give byte-identical output.

#include <string>
#include <string_view>

#include "digraph_intersect/cover.hpp"

namespace digraph_intersect {

bool is_valid_label(std::string_view label);

/// Throws ParseError with the 1-based line number on a malformed line, an
/// invalid label or a repeated arc.
Digraph parse_edge_list(std::string_view text);

/// Original vertices only; isolated vertices are written as lone labels.
std::string write_edge_list(const Digraph& d);

std::string write_json(const Digraph& d);
std::string write_json(const Cover& c);
std::string write_json(const IntersectionRepresentation& r);
std::string write_json(const CoverReport& report);

// Readers throw ParseError carrying a JSON path ("$.arcs[2][0].label: ...").
Digraph parse_digraph_json(std::string_view text);
/// "vertices" and "arcs" may be omitted, leaving an empty target.
Cover parse_cover_json(std::string_view text);
/// The declared arcs must be exactly the arcs the assignment realizes.
IntersectionRepresentation parse_representation_json(std::string_view text);

enum class GraphFormat { Auto, EdgeList, Json };

/// Auto picks JSON when the first non-blank character is '{'.
Digraph read_digraph(std::string_view text, GraphFormat format = GraphFormat::Auto);

/// DOT text; original vertices as ellipses, arc-nodes as boxes.
std::string export_dot(const Digraph& h);

/// As above, with every arc labeled by the 1-based indices of the GBSs that
/// cover it. Throws DomainError if `c` is not a valid cover of `h`.
std::string export_dot(const Digraph& h, const Cover& c);

}  // namespace digraph_intersect
