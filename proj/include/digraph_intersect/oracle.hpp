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

// Exact answers by exhaustive search, for small digraphs. These do not use
// any of the closed-form constructions and serve as ground truth for them.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "digraph_intersect/cover.hpp"
#include "digraph_intersect/error.hpp"

namespace digraph_intersect {

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::duration<double> max_seconds{30.0};
};

struct OracleResult {
  std::size_t minimum = 0;
  Cover witness;
  std::uint64_t explored_nodes = 0;
  /// When set, `minimum` is only the best size found and `witness` a cover
  /// of that size; neither is certified.
  bool timed_out = false;
};

class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// All GBSs (X|Y) of `h` with Y the common out-neighborhood of X and X the
/// common in-neighborhood of Y. Ordered by arc count descending, then by
/// (tops, bottoms) in canonical order.
std::vector<Gbs> enumerate_maximal_gbs(const Digraph& h);

/// Minimum number of GBSs covering the arcs of `h`, by branch and bound over
/// the maximal GBSs. The witness is the first minimum cover in the
/// sequential search order, so it does not depend on `workers`.
OracleResult min_gbs_cover_exact(const Digraph& h, const SearchBudget& budget = {},
                                 unsigned workers = 1);

/// Every minimum cover built from maximal GBSs (each minimum cover maps to
/// at least one of these by growing its members). Throws BudgetExceeded
/// instead of returning a partial list.
std::vector<Cover> all_min_covers(const Digraph& h, const SearchBudget& budget = {});

/// vw, uw, ux arcs imply vx, for any (not necessarily distinct) u,v,w,x.
bool h_condition_holds(const Digraph& h);

/// A digraph is a line digraph exactly when it meets the H-condition.
inline bool is_line_digraph(const Digraph& h) { return h_condition_holds(h); }

/// DIGRAPH_INTERSECT_THREADS when it holds a positive integer, otherwise
/// the hardware concurrency.
unsigned default_worker_count();

}  // namespace digraph_intersect
