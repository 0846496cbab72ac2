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

#include <array>
#include <optional>
#include <string_view>

#include "digraph_intersect/digraph.hpp"

namespace digraph_intersect {

// All transforms take a digraph over original vertices. An arc (t, h) of
// the input becomes the arc-node NodeId::arc(t, h) in the output. To
// transform a transformed digraph again, flatten it first.

/// L(D): one node per arc; (t,h) -> (h,w) for consecutive arcs. A loop
/// follows itself, so it yields a loop.
Digraph line_digraph(const Digraph& d);

/// S(D): every arc t->h is split into t -> (t,h) -> h. Never has loops.
Digraph subdivision(const Digraph& d);

/// M(D) = S(D) plus the arcs of L(D).
Digraph middle(const Digraph& d);

/// N(D) = S(D) plus the arcs of D.
Digraph n_union(const Digraph& d);

/// T-(D) = N(D) plus the non-loop arcs of L(D).
Digraph t_minus(const Digraph& d);

/// T(D) = M(D) plus the arcs of D.
Digraph total(const Digraph& d);

enum class TransformKind { Identity, Line, Subdivision, Middle, NUnion, TMinus, Total };

inline constexpr std::array kAllTransforms = {
    TransformKind::Identity, TransformKind::Line,   TransformKind::Subdivision,
    TransformKind::Middle,   TransformKind::NUnion, TransformKind::TMinus,
    TransformKind::Total};

Digraph apply_transform(TransformKind kind, const Digraph& d);

/// Command-line names: identity, line, subdivision, middle, n, tminus, total.
std::string_view to_string(TransformKind kind);
std::optional<TransformKind> parse_transform_kind(std::string_view name);

/// Relabels every node as an original vertex named by NodeId::to_string(),
/// so the result can be fed to another transform.
Digraph flatten_labels(const Digraph& d);

}  // namespace digraph_intersect
