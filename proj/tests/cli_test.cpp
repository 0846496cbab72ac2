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

#include "digraph_intersect/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "digraph_intersect/io.hpp"
#include "digraph_intersect/transforms.hpp"
#include "support/fixtures.hpp"
#include "support/random_digraph.hpp"

namespace digraph_intersect {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("digraph_intersect_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

  fs::path dir_;
};

TEST_F(CliTest, InumberFormulaAndExact) {
  const auto d2 = file("d2.txt", "a b\nb c\n");
  const auto d3 = file("d3.txt", "x x\n");
  EXPECT_EQ(run({"inumber", "--in", d2, "--transform", "subdivision", "--formula"}).out, "4\n");
  EXPECT_EQ(run({"inumber", "--in", d3, "--transform", "total", "--exact"}).out, "1\n");
  EXPECT_EQ(run({"inumber", "--in", d2, "--exact"}).out, "2\n");
}

TEST_F(CliTest, InumberFormulaRefusals) {
  const auto bad = file("bad.txt", "x x\nx y\ny x\n");
  for (const char* t : {"total", "tminus", "line", "identity"}) {
    const Outcome o = run({"inumber", "--in", bad, "--transform", t, "--formula"});
    EXPECT_EQ(o.code, cli::kExitDomainError) << t;
    EXPECT_TRUE(o.out.empty()) << t;
    EXPECT_FALSE(o.err.empty()) << t;
  }
  EXPECT_EQ(run({"inumber", "--in", bad, "--transform", "total", "--exact"}).code, cli::kExitOk);
}

TEST_F(CliTest, InumberTimeoutReportsJson) {
  const auto g = file("g.txt", "a b\nb c\nc a\na a\nb d\nd b\nc d\n");
  const Outcome o = run({"inumber", "--in", g, "--transform", "total", "--exact", "--budget-nodes", "1"});
  EXPECT_EQ(o.code, cli::kExitDomainError);
  EXPECT_NE(o.out.find("\"timed_out\":true"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  const auto d2 = file("d2.txt", "a b\nb c\n");
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"inumber", "--in", d2}).code, cli::kExitUsage);
  EXPECT_EQ(run({"inumber", "--in", d2, "--formula", "--exact"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"transform", "--kind", "sideways", "--in", d2}).code, cli::kExitUsage);
  EXPECT_EQ(run({"cover", "--in", d2}).code, cli::kExitUsage);
  const Outcome help = run({"--help"});
  EXPECT_EQ(help.code, cli::kExitOk);
  EXPECT_NE(help.out.find("inumber"), std::string::npos);
}

TEST_F(CliTest, DomainErrors) {
  EXPECT_EQ(run({"hcond", "--in", (dir_ / "absent.txt").string()}).code, cli::kExitDomainError);
  const auto junk = file("junk.txt", "a b c\n");
  const Outcome o = run({"hcond", "--in", junk});
  EXPECT_EQ(o.code, cli::kExitDomainError);
  EXPECT_NE(o.err.find("line 1"), std::string::npos);
}

TEST_F(CliTest, TransformOutputsParse) {
  const auto d2 = file("d2.txt", "a b\nb c\n");
  for (auto k : kAllTransforms) {
    if (k == TransformKind::Identity) continue;
    const Outcome o = run({"transform", "--kind", std::string(to_string(k)), "--in", d2});
    ASSERT_EQ(o.code, cli::kExitOk);
    EXPECT_EQ(parse_digraph_json(o.out), apply_transform(k, testing::d2()));
  }
  const Outcome dot = run({"transform", "--kind", "subdivision", "--in", d2, "--dot"});
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);

  const auto json_in = file("d2.json", write_json(testing::d2()));
  EXPECT_EQ(parse_digraph_json(run({"transform", "--kind", "line", "--in", json_in, "--format", "json"}).out),
            line_digraph(testing::d2()));
}

TEST_F(CliTest, CoverVerifyAndRepr) {
  const auto d4 = file("d4.txt", "x x\nx s\n");
  const Outcome c = run({"cover", "--kind", "t", "--in", d4});
  ASSERT_EQ(c.code, cli::kExitOk);
  EXPECT_EQ(parse_cover_json(c.out).size(), 2u);
  const auto cover = file("cover.json", c.out);
  const auto target = file("t4.json", write_json(total(testing::d4())));

  const Outcome v = run({"verify-cover", "--graph", target, "--cover", cover});
  EXPECT_EQ(v.code, cli::kExitOk);
  EXPECT_NE(v.out.find("\"valid\": true"), std::string::npos);

  const Outcome wrong = run({"verify-cover", "--graph", d4, "--cover", cover});
  EXPECT_EQ(wrong.code, cli::kExitDomainError);
  EXPECT_NE(wrong.out.find("\"valid\": false"), std::string::npos);

  const Outcome r = run({"repr", "--in", target, "--cover", cover});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(parse_representation_json(r.out).ground_size, 2u);
}

TEST_F(CliTest, CoverTNamesTheConnector) {
  const auto bad = file("unrestricted.txt", "x x\nx y\ny x\n");
  const Outcome o = run({"cover", "--kind", "t", "--in", bad});
  EXPECT_EQ(o.code, cli::kExitDomainError);
  EXPECT_NE(o.err.find("connector y"), std::string::npos);
  EXPECT_TRUE(o.out.empty());
}

TEST_F(CliTest, Hcond) {
  EXPECT_EQ(run({"hcond", "--in", file("h.txt", "v w\nu w\nu x\n")}).out, "false\n");
  EXPECT_EQ(run({"hcond", "--in", file("d2.txt", "a b\nb c\n")}).out, "true\n");
}

// Formula and search agree wherever the formula applies.
TEST_F(CliTest, FormulaMatchesExactOnRandomInstances) {
  std::mt19937 rng(31);
  for (int i = 0; i < 40; ++i) {
    const Digraph d = testing::random_digraph(rng, {.max_vertices = 4, .max_arcs = 6});
    const auto path = file("r.txt", write_edge_list(d));
    for (const char* t : {"subdivision", "middle", "n", "tminus", "total"}) {
      const Outcome f = run({"inumber", "--in", path, "--transform", t, "--formula"});
      if (f.code != cli::kExitOk) continue;
      EXPECT_EQ(run({"inumber", "--in", path, "--transform", t, "--exact"}).out, f.out) << t;
    }
  }
}

}  // namespace
}  // namespace digraph_intersect
