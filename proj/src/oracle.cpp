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

#include "digraph_intersect/oracle.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "digraph_intersect/matrix.hpp"

namespace digraph_intersect {
namespace {

using Bits = boost::dynamic_bitset<>;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<Gbs> maximal_gbs(const Digraph& h) {
  const NodeIndex idx(h.vertices());
  const auto n = static_cast<std::size_t>(idx.size());
  std::vector<Bits> out(n, Bits(n));
  for (const auto& [t, hd] : h.arcs()) {
    out[static_cast<std::size_t>(idx.at(t))].set(static_cast<std::size_t>(idx.at(hd)));
  }

  // Bottom sides of maximal GBSs are exactly the non-empty intersections of
  // out-neighborhoods. Intersecting with one generator at a time reaches
  // all of them.
  std::vector<Bits> generators;
  for (const auto& o : out) {
    if (o.any()) generators.push_back(o);
  }
  std::set<Bits> seen(generators.begin(), generators.end());
  std::deque<Bits> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    Bits y = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Bits z = y & g;
      if (z.any() && seen.insert(z).second) queue.push_back(std::move(z));
    }
  }

  std::vector<Gbs> result;
  for (const auto& y : seen) {
    NodeSet tops, bottoms;
    for (std::size_t t = 0; t < n; ++t) {
      if (y.is_subset_of(out[t])) tops.insert(idx.node(static_cast<Eigen::Index>(t)));
    }
    for (auto b = y.find_first(); b != Bits::npos; b = y.find_next(b)) {
      bottoms.insert(idx.node(static_cast<Eigen::Index>(b)));
    }
    result.emplace_back(std::move(tops), std::move(bottoms));
  }
  std::sort(result.begin(), result.end(), [](const Gbs& a, const Gbs& b) {
    if (a.arc_count() != b.arc_count()) return a.arc_count() > b.arc_count();
    return a < b;
  });
  return result;
}

// Set-cover view of the arcs of a digraph over its maximal GBSs.
class CoverProblem {
 public:
  explicit CoverProblem(const Digraph& h)
      : candidates_(maximal_gbs(h)), arcs_(h.arcs().begin(), h.arcs().end()) {
    std::map<Arc, std::size_t> arc_pos;
    for (std::size_t i = 0; i < arcs_.size(); ++i) arc_pos.emplace(arcs_[i], i);
    cand_arcs_.assign(candidates_.size(), Bits(arcs_.size()));
    arc_cands_.assign(arcs_.size(), {});
    arc_cand_bits_.assign(arcs_.size(), Bits(candidates_.size()));
    for (std::size_t k = 0; k < candidates_.size(); ++k) {
      for (const auto& a : candidates_[k].arcs()) {
        const std::size_t i = arc_pos.at(a);
        cand_arcs_[k].set(i);
        arc_cands_[i].push_back(k);
        arc_cand_bits_[i].set(k);
      }
    }
    rarity_order_.resize(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) rarity_order_[i] = i;
    std::stable_sort(rarity_order_.begin(), rarity_order_.end(), [&](std::size_t a, std::size_t b) {
      return arc_cands_[a].size() < arc_cands_[b].size();
    });
  }

  std::size_t arc_count() const { return arcs_.size(); }
  std::size_t candidate_count() const { return candidates_.size(); }
  const Gbs& candidate(std::size_t k) const { return candidates_[k]; }
  const Bits& covered_by(std::size_t k) const { return cand_arcs_[k]; }
  const std::vector<std::size_t>& candidates_of(std::size_t arc) const { return arc_cands_[arc]; }

  Bits all_arcs() const { return Bits(arcs_.size()).set(); }
  Bits no_candidates() const { return Bits(candidates_.size()); }

  // Uncovered arc with the fewest allowed candidates, lowest index on ties;
  // kNone if some uncovered arc has no allowed candidate left.
  std::size_t branch_arc(const Bits& uncovered, const Bits& forbidden) const {
    std::size_t best = kNone, best_count = kNone;
    for (auto i = uncovered.find_first(); i != Bits::npos; i = uncovered.find_next(i)) {
      const std::size_t count = (arc_cand_bits_[i] - forbidden).count();
      if (count == 0) return kNone;
      if (count < best_count) {
        best = i;
        best_count = count;
        if (count == 1) break;
      }
    }
    return best;
  }

  // Greedy set of uncovered arcs no two of which share an allowed
  // candidate. Each needs its own GBS.
  std::size_t lower_bound(const Bits& uncovered, const Bits& forbidden) const {
    Bits used(candidates_.size());
    std::size_t count = 0;
    for (auto i : rarity_order_) {
      if (!uncovered.test(i)) continue;
      const Bits allowed = arc_cand_bits_[i] - forbidden;
      if (!allowed.intersects(used)) {
        ++count;
        used |= allowed;
      }
    }
    return count;
  }

  std::vector<std::size_t> greedy_cover() const {
    std::vector<std::size_t> chosen;
    Bits uncovered = all_arcs();
    while (uncovered.any()) {
      std::size_t best = 0, gain = 0;
      for (std::size_t k = 0; k < candidates_.size(); ++k) {
        const std::size_t g = (cand_arcs_[k] & uncovered).count();
        if (g > gain) {
          best = k;
          gain = g;
        }
      }
      chosen.push_back(best);
      uncovered -= cand_arcs_[best];
    }
    return chosen;
  }

 private:
  std::vector<Gbs> candidates_;
  std::vector<Arc> arcs_;
  std::vector<Bits> cand_arcs_;
  std::vector<std::vector<std::size_t>> arc_cands_;
  std::vector<Bits> arc_cand_bits_;
  std::vector<std::size_t> rarity_order_;
};

class BudgetTracker {
 public:
  explicit BudgetTracker(const SearchBudget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  // Counts one search node; false once the budget is spent.
  bool tick() {
    const auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_.max_nodes) exhausted_ = true;
    if ((n & 0xff) == 0 && std::chrono::steady_clock::now() - start_ > budget_.max_seconds) {
      exhausted_ = true;
    }
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

// A partial cover: arcs still open, candidates chosen, and candidates
// excluded because an earlier sibling branch already tried them.
struct SearchState {
  Bits uncovered;
  Bits forbidden;
  std::vector<std::size_t> chosen;
};

template <typename Visit>
void for_each_child(const CoverProblem& p, const SearchState& s, std::size_t arc, Visit&& visit) {
  SearchState child{{}, s.forbidden, s.chosen};
  child.chosen.push_back(kNone);
  for (auto k : p.candidates_of(arc)) {
    if (s.forbidden.test(k)) continue;
    child.uncovered = s.uncovered - p.covered_by(k);
    child.chosen.back() = k;
    if (!visit(child)) return;
    child.forbidden.set(k);
  }
}

struct Incumbent {
  std::mutex mutex;
  std::atomic<std::size_t> size;
  std::vector<std::size_t> chosen;
};

// Looks for covers strictly smaller than the incumbent.
void improve(const CoverProblem& p, const SearchState& s, Incumbent& best, BudgetTracker& budget) {
  if (!budget.tick()) return;
  if (s.uncovered.none()) {
    std::lock_guard lock(best.mutex);
    if (s.chosen.size() < best.size) {
      best.size = s.chosen.size();
      best.chosen = s.chosen;
    }
    return;
  }
  if (s.chosen.size() + p.lower_bound(s.uncovered, s.forbidden) >= best.size.load()) return;
  const std::size_t arc = p.branch_arc(s.uncovered, s.forbidden);
  if (arc == kNone) return;
  for_each_child(p, s, arc, [&](const SearchState& child) {
    improve(p, child, best, budget);
    return !budget.exhausted();
  });
}

// First cover of size at most `limit` in search order.
bool first_within(const CoverProblem& p, const SearchState& s, std::size_t limit,
                  BudgetTracker& budget, std::vector<std::size_t>& found) {
  if (!budget.tick()) return false;
  if (s.uncovered.none()) {
    found = s.chosen;
    return true;
  }
  if (s.chosen.size() + p.lower_bound(s.uncovered, s.forbidden) > limit) return false;
  const std::size_t arc = p.branch_arc(s.uncovered, s.forbidden);
  if (arc == kNone) return false;
  bool done = false;
  for_each_child(p, s, arc, [&](const SearchState& child) {
    done = first_within(p, child, limit, budget, found);
    return !done && !budget.exhausted();
  });
  return done;
}

// Splits the top of the search tree into independent subtrees.
std::vector<SearchState> split(const CoverProblem& p, SearchState root, std::size_t want) {
  std::vector<SearchState> frontier{std::move(root)};
  for (int depth = 0; depth < 3 && frontier.size() < want; ++depth) {
    std::vector<SearchState> next;
    for (auto& s : frontier) {
      const std::size_t arc = s.uncovered.any() ? p.branch_arc(s.uncovered, s.forbidden) : kNone;
      if (arc == kNone) {
        next.push_back(std::move(s));
        continue;
      }
      for_each_child(p, s, arc, [&](const SearchState& child) {
        next.push_back(child);
        return true;
      });
    }
    frontier = std::move(next);
  }
  return frontier;
}

Cover to_cover(const Digraph& h, const CoverProblem& p, std::vector<std::size_t> chosen) {
  Cover c{h, {}};
  std::sort(chosen.begin(), chosen.end());
  for (auto k : chosen) c.gbss.push_back(p.candidate(k));
  return c;
}

}  // namespace

std::vector<Gbs> enumerate_maximal_gbs(const Digraph& h) { return maximal_gbs(h); }

OracleResult min_gbs_cover_exact(const Digraph& h, const SearchBudget& budget, unsigned workers) {
  const CoverProblem p(h);
  BudgetTracker tracker(budget);
  const SearchState root{p.all_arcs(), p.no_candidates(), {}};

  Incumbent best;
  best.chosen = p.greedy_cover();
  best.size = best.chosen.size();

  // Phase 1 settles the minimum; threads share only the incumbent size.
  workers = std::max(1u, workers);
  if (workers == 1) {
    improve(p, root, best, tracker);
  } else {
    const std::vector<SearchState> tasks = split(p, root, 8 * std::size_t{workers});
    std::atomic<std::size_t> next{0};
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < tasks.size(); i = next++) {
            improve(p, tasks[i], best, tracker);
            if (tracker.exhausted()) return;
          }
        });
      }
    }
  }

  OracleResult r;
  r.minimum = best.size;
  if (tracker.exhausted()) {
    r.timed_out = true;
    r.witness = to_cover(h, p, best.chosen);
    r.explored_nodes = tracker.nodes();
    return r;
  }

  // Phase 2 picks the first minimum cover in sequential search order, which
  // makes the witness independent of thread timing.
  std::vector<std::size_t> canonical;
  if (first_within(p, root, r.minimum, tracker, canonical)) {
    r.witness = to_cover(h, p, std::move(canonical));
  } else {
    r.timed_out = true;
    r.witness = to_cover(h, p, best.chosen);
  }
  r.explored_nodes = tracker.nodes();
  return r;
}

std::vector<Cover> all_min_covers(const Digraph& h, const SearchBudget& budget) {
  const OracleResult best = min_gbs_cover_exact(h, budget, 1);
  if (best.timed_out) throw BudgetExceeded("search budget exhausted before the minimum was proven");

  const CoverProblem p(h);
  BudgetTracker tracker(budget);
  std::set<std::vector<std::size_t>> found;
  auto enumerate = [&](auto& self, const SearchState& s) -> void {
    if (!tracker.tick()) throw BudgetExceeded("search budget exhausted while enumerating covers");
    if (s.uncovered.none()) {
      auto key = s.chosen;
      std::sort(key.begin(), key.end());
      found.insert(std::move(key));
      return;
    }
    if (s.chosen.size() + p.lower_bound(s.uncovered, s.forbidden) > best.minimum) return;
    const std::size_t arc = p.branch_arc(s.uncovered, s.forbidden);
    if (arc == kNone) return;
    for_each_child(p, s, arc, [&](const SearchState& child) {
      self(self, child);
      return true;
    });
  };
  enumerate(enumerate, SearchState{p.all_arcs(), p.no_candidates(), {}});

  std::vector<Cover> covers;
  for (const auto& key : found) covers.push_back(to_cover(h, p, key));
  return covers;
}

bool h_condition_holds(const Digraph& h) {
  // Two tails sharing a head must have identical out-neighborhoods.
  for (const auto& w : h.vertices()) {
    const NodeSet& tails = h.in_neighbors(w);
    for (const auto& u : tails) {
      for (const auto& v : tails) {
        const NodeSet& from_u = h.out_neighbors(u);
        const NodeSet& from_v = h.out_neighbors(v);
        if (!std::includes(from_v.begin(), from_v.end(), from_u.begin(), from_u.end())) {
          return false;
        }
      }
    }
  }
  return true;
}

unsigned default_worker_count() {
  if (const char* env = std::getenv("DIGRAPH_INTERSECT_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0) return static_cast<unsigned>(std::min(cap, 256L));
    } catch (const std::exception&) {
      // not a number: fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace digraph_intersect
