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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "digraph_intersect/matrix.hpp"
#include "digraph_intersect/transforms.hpp"
#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "support/random_digraph.hpp"

namespace digraph_intersect {
namespace {

using testing::d1;
using testing::d2;
using testing::d3;
using testing::d4;
using testing::d5;
using testing::E;
using testing::V;

Gbs G(NodeSet tops, NodeSet bottoms) { return Gbs(std::move(tops), std::move(bottoms)); }

std::set<Gbs> as_set(const std::vector<Gbs>& v) { return {v.begin(), v.end()}; }

const Digraph& h_counterexample() {
  static const Digraph d = Digraph::from_labels({{"v", "w"}, {"u", "w"}, {"u", "x"}});
  return d;
}

TEST(EnumerateMaximalGbs, Examples) {
  EXPECT_EQ(as_set(enumerate_maximal_gbs(subdivision(d1()))),
            (std::set<Gbs>{G({V("a")}, {E("a", "b")}), G({E("a", "b")}, {V("b")})}));
  EXPECT_EQ(as_set(enumerate_maximal_gbs(total(d3()))),
            (std::set<Gbs>{G({V("x"), E("x", "x")}, {V("x"), E("x", "x")})}));
  EXPECT_EQ(as_set(enumerate_maximal_gbs(d5())),
            (std::set<Gbs>{G({V("a")}, {V("b")}), G({V("b")}, {V("a")})}));
  EXPECT_TRUE(enumerate_maximal_gbs(Digraph::from_labels({}, {"p"})).empty());
}

TEST(EnumerateMaximalGbs, OrderedBySizeThenCanonically) {
  const auto list = enumerate_maximal_gbs(total(d4()));
  for (std::size_t i = 1; i < list.size(); ++i) {
    const auto& p = list[i - 1];
    const auto& q = list[i];
    EXPECT_TRUE(p.arc_count() > q.arc_count() || (p.arc_count() == q.arc_count() && p < q));
  }
}

TEST(EnumerateMaximalGbs, MatchesBruteForce) {
  std::mt19937 rng(11);
  testing::RandomDigraphOptions o;
  o.max_vertices = 4;
  o.max_arcs = 7;
  for (int i = 0; i < 150; ++i) {
    const Digraph d = testing::random_digraph(rng, o);
    for (const Digraph& h : {d, middle(d), total(d)}) {
      if (h.vertex_count() > 12) continue;
      EXPECT_EQ(as_set(enumerate_maximal_gbs(h)), testing::brute_maximal_gbs(h));
    }
  }
}

TEST(MinCoverExact, Examples) {
  EXPECT_EQ(min_gbs_cover_exact(subdivision(d2())).minimum, 4u);
  EXPECT_EQ(min_gbs_cover_exact(total(d3())).minimum, 1u);
  EXPECT_EQ(min_gbs_cover_exact(total(d4())).minimum, 2u);
  EXPECT_EQ(min_gbs_cover_exact(Digraph()).minimum, 0u);
}

// A loop fed by a connector costs T-(D) one more GBS than 2v - A - B.
TEST(MinCoverExact, TMinusOutsideRestriction) {
  const Digraph d = Digraph::from_labels({{"v0", "v1"}, {"v1", "v0"}, {"v1", "v1"}});
  EXPECT_EQ(subdivision_intersection_number(d), 4u);
  EXPECT_EQ(min_gbs_cover_exact(t_minus(d)).minimum, 5u);
}

TEST(MinCoverExact, MatchesBruteForceAndWitnessIsValid) {
  std::mt19937 rng(12);
  testing::RandomDigraphOptions o;
  o.max_vertices = 4;
  o.max_arcs = 6;
  for (int i = 0; i < 120; ++i) {
    const Digraph d = testing::random_digraph(rng, o);
    for (const Digraph& h : {d, subdivision(d), n_union(d)}) {
      if (h.vertex_count() > 10) continue;
      const OracleResult r = min_gbs_cover_exact(h);
      ASSERT_FALSE(r.timed_out);
      EXPECT_EQ(r.minimum, testing::brute_min_cover(h));
      EXPECT_EQ(r.witness.size(), r.minimum);
      EXPECT_TRUE(verify_cover(h, r.witness).valid);
    }
  }
}

TEST(MinCoverExact, WorkerCountDoesNotChangeAnswer) {
  std::mt19937 rng(13);
  for (int i = 0; i < 30; ++i) {
    const Digraph h = total(testing::random_digraph(rng, {.max_vertices = 4, .max_arcs = 7}));
    const OracleResult one = min_gbs_cover_exact(h, {}, 1);
    for (unsigned w : {2u, 4u, 8u}) {
      const OracleResult many = min_gbs_cover_exact(h, {}, w);
      EXPECT_EQ(many.minimum, one.minimum);
      EXPECT_EQ(many.witness, one.witness);
    }
  }
}

TEST(MinCoverExact, BudgetExhaustionIsFlagged) {
  std::mt19937 rng(14);
  const Digraph h = middle(testing::random_digraph(rng, {.min_vertices = 5, .max_vertices = 5,
                                                         .max_arcs = 14, .loops = true}));
  const OracleResult r = min_gbs_cover_exact(h, {.max_nodes = 1});
  EXPECT_TRUE(r.timed_out);
  EXPECT_TRUE(verify_cover(h, r.witness).valid);
  EXPECT_EQ(r.witness.size(), r.minimum);
}

TEST(AllMinCovers, Examples) {
  const auto s1 = all_min_covers(subdivision(d1()));
  ASSERT_EQ(s1.size(), 1u);

  const auto s3 = all_min_covers(subdivision(d3()));
  ASSERT_EQ(s3.size(), 1u);
  EXPECT_EQ(as_set(s3[0].gbss),
            (std::set<Gbs>{G({E("x", "x")}, {V("x")}), G({V("x")}, {E("x", "x")})}));

  const auto c5 = all_min_covers(d5());
  ASSERT_EQ(c5.size(), 1u);
  EXPECT_EQ(as_set(c5[0].gbss), (std::set<Gbs>{G({V("a")}, {V("b")}), G({V("b")}, {V("a")})}));
}

TEST(AllMinCovers, SeveralWhenHConditionFails) {
  // A bipartite 6-cycle: the three top stars and the three bottom stars are
  // two different minimum covers.
  const Digraph h = Digraph::from_labels(
      {{"t1", "bx"}, {"t1", "by"}, {"t2", "by"}, {"t2", "bz"}, {"t3", "bz"}, {"t3", "bx"}});
  EXPECT_FALSE(h_condition_holds(h));
  const auto all = all_min_covers(h);
  ASSERT_EQ(all.size(), 2u);
  for (const auto& c : all) {
    EXPECT_EQ(c.size(), 3u);
    EXPECT_TRUE(verify_cover(h, c).valid);
  }
}

TEST(AllMinCovers, BudgetExhaustionThrows) {
  EXPECT_THROW(all_min_covers(total(d4()), {.max_nodes = 1}), BudgetExceeded);
}

TEST(HCondition, Examples) {
  EXPECT_TRUE(h_condition_holds(subdivision(d2())));
  EXPECT_FALSE(h_condition_holds(h_counterexample()));
  EXPECT_TRUE(h_condition_holds(line_digraph(d2())));
  EXPECT_TRUE(is_line_digraph(line_digraph(d5())));
  EXPECT_FALSE(is_line_digraph(h_counterexample()));
  EXPECT_TRUE(is_line_digraph(subdivision(d4())));
}

// The definition, the library predicate and the matrix closure agree.
TEST(HCondition, ThreeRoutesAgree) {
  std::mt19937 rng(15);
  for (int i = 0; i < 400; ++i) {
    const Digraph d = testing::random_digraph(rng, {.max_vertices = 5, .max_arcs = 12});
    const NodeIndex idx(d.vertices());
    const bool expected = testing::brute_h_condition(d);
    EXPECT_EQ(h_condition_holds(d), expected);
    EXPECT_EQ(heuchenne_closed(adjacency_matrix(d, idx)), expected);
    EXPECT_TRUE(h_condition_holds(subdivision(d)));
    EXPECT_TRUE(h_condition_holds(line_digraph(d)));
  }
}

TEST(DefaultWorkerCount, ReadsEnvironment) {
  ::setenv("DIGRAPH_INTERSECT_THREADS", "3", 1);
  EXPECT_EQ(default_worker_count(), 3u);
  ::setenv("DIGRAPH_INTERSECT_THREADS", "nonsense", 1);
  EXPECT_GE(default_worker_count(), 1u);
  ::setenv("DIGRAPH_INTERSECT_THREADS", "0", 1);
  EXPECT_GE(default_worker_count(), 1u);
  ::unsetenv("DIGRAPH_INTERSECT_THREADS");
  EXPECT_GE(default_worker_count(), 1u);
}

}  // namespace
}  // namespace digraph_intersect
