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

#include "digraph_intersect/digraph.hpp"

namespace digraph_intersect::testing {

inline NodeId V(const char* label) { return NodeId::original(label); }
inline NodeId E(const char* tail, const char* head) { return NodeId::arc(tail, head); }

// D1 = a->b; D2 = a->b->c; D3 = loop at x; D4 = loop at x plus x->s;
// D5 = a 2-cycle.
inline Digraph d1() { return Digraph::from_labels({{"a", "b"}}); }
inline Digraph d2() { return Digraph::from_labels({{"a", "b"}, {"b", "c"}}); }
inline Digraph d3() { return Digraph::from_labels({{"x", "x"}}); }
inline Digraph d4() { return Digraph::from_labels({{"x", "x"}, {"x", "s"}}); }
inline Digraph d5() { return Digraph::from_labels({{"a", "b"}, {"b", "a"}}); }

inline ArcSet arcs(std::initializer_list<Arc> list) { return ArcSet(list); }

}  // namespace digraph_intersect::testing
