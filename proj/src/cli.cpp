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

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "digraph_intersect/cover.hpp"
#include "digraph_intersect/error.hpp"
#include "digraph_intersect/io.hpp"
#include "digraph_intersect/oracle.hpp"
#include "digraph_intersect/transforms.hpp"

namespace digraph_intersect::cli {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::map<std::string, GraphFormat> kFormats{{"edgelist", GraphFormat::EdgeList},
                                                  {"json", GraphFormat::Json}};

const std::map<std::string, TransformKind> kTransformNames{
    {"line", TransformKind::Line},    {"subdivision", TransformKind::Subdivision},
    {"middle", TransformKind::Middle}, {"n", TransformKind::NUnion},
    {"tminus", TransformKind::TMinus}, {"total", TransformKind::Total}};

const std::map<std::string, Cover (*)(const Digraph&)> kCoverKinds{
    {"s", &subdivision_cover}, {"m", &middle_cover},  {"n", &n_union_cover},
    {"tminus", &t_minus_cover}, {"t", &total_cover}};

// Closed form for the GBS minimum of a transform, where one is established.
std::size_t formula_for(TransformKind kind, const Digraph& d) {
  switch (kind) {
    case TransformKind::Subdivision:
    case TransformKind::Middle:
    case TransformKind::NUnion:
      return subdivision_intersection_number(d);
    case TransformKind::TMinus:
      if (auto bad = find_loop_restriction_violation(d)) {
        throw DomainError("formula not established; use --exact (loop at " +
                          bad->looped.to_string() + " touches connector " +
                          bad->neighbor.to_string() + ")");
      }
      return subdivision_intersection_number(d);
    case TransformKind::Total:
      return total_intersection_number(d);
    case TransformKind::Identity:
    case TransformKind::Line:
      break;
  }
  throw DomainError("no closed form for transform '" + std::string(to_string(kind)) +
                    "'; use --exact");
}

struct Options {
  std::string in;
  std::string format = "auto";
  std::string kind;
  bool dot = false;
  std::string graph;
  std::string cover;
  std::string transform = "identity";
  bool formula = false;
  bool exact = false;
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  double budget_secs = SearchBudget{}.max_seconds.count();
};

Digraph load_graph(const std::string& path, const std::string& format) {
  const auto it = kFormats.find(format);
  return read_digraph(slurp(path), it == kFormats.end() ? GraphFormat::Auto : it->second);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digraph transforms, GBS covers and intersection numbers", "digraph-intersect"};
  app.require_subcommand(1);
  Options o;
  std::vector<std::string> format_names{"auto", "edgelist", "json"};

  auto* transform = app.add_subcommand("transform", "Print a transformed digraph");
  transform->add_option("--kind", o.kind, "line|subdivision|middle|n|tminus|total")
      ->required()
      ->check(CLI::IsMember({"line", "subdivision", "middle", "n", "tminus", "total"}));
  transform->add_option("--in", o.in, "Input digraph")->required();
  transform->add_option("--format", o.format, "Input format")->check(CLI::IsMember(format_names));
  transform->add_flag("--dot", o.dot, "Emit DOT instead of JSON");

  auto* cover = app.add_subcommand("cover", "Print the constructed minimum cover of a transform");
  cover->add_option("--kind", o.kind, "s|m|n|tminus|t")
      ->required()
      ->check(CLI::IsMember({"s", "m", "n", "tminus", "t"}));
  cover->add_option("--in", o.in, "Input digraph")->required();
  cover->add_option("--format", o.format, "Input format")->check(CLI::IsMember(format_names));

  auto* verify = app.add_subcommand("verify-cover", "Check a cover against a digraph");
  verify->add_option("--graph", o.graph, "Digraph (edge list or JSON)")->required();
  verify->add_option("--cover", o.cover, "Cover JSON")->required();

  auto* inumber = app.add_subcommand("inumber", "Print the intersection number");
  inumber->add_option("--in", o.in, "Input digraph")->required();
  inumber->add_option("--format", o.format, "Input format")->check(CLI::IsMember(format_names));
  inumber->add_option("--transform", o.transform, "identity|line|subdivision|middle|n|tminus|total")
      ->check(CLI::IsMember({"identity", "line", "subdivision", "middle", "n", "tminus", "total"}));
  auto* formula_flag = inumber->add_flag("--formula", o.formula, "Closed-form value");
  auto* exact_flag = inumber->add_flag("--exact", o.exact, "Exhaustive search");
  formula_flag->excludes(exact_flag);
  inumber->add_option("--budget-nodes", o.budget_nodes, "Search node budget")
      ->check(CLI::PositiveNumber);
  inumber->add_option("--budget-secs", o.budget_secs, "Search time budget in seconds")
      ->check(CLI::PositiveNumber);

  auto* hcond = app.add_subcommand("hcond", "Does the digraph meet the H-condition?");
  hcond->add_option("--in", o.in, "Input digraph")->required();
  hcond->add_option("--format", o.format, "Input format")->check(CLI::IsMember(format_names));

  auto* repr = app.add_subcommand("repr", "Intersection representation from a cover");
  repr->add_option("--in", o.in, "Digraph")->required();
  repr->add_option("--cover", o.cover, "Cover JSON")->required();
  repr->add_option("--format", o.format, "Input format")->check(CLI::IsMember(format_names));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (inumber->parsed() && o.formula == o.exact) {
      throw CLI::ValidationError("inumber", "exactly one of --formula or --exact is required");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (transform->parsed()) {
      const Digraph h = apply_transform(kTransformNames.at(o.kind), load_graph(o.in, o.format));
      out << (o.dot ? export_dot(h) : write_json(h));
    } else if (cover->parsed()) {
      out << write_json(kCoverKinds.at(o.kind)(load_graph(o.in, o.format)));
    } else if (verify->parsed()) {
      const Digraph h = load_graph(o.graph, "auto");
      const CoverReport report = verify_cover(h, parse_cover_json(slurp(o.cover)));
      out << write_json(report);
      if (!report.valid) {
        err << "cover is not valid\n";
        return kExitDomainError;
      }
    } else if (inumber->parsed()) {
      const auto kind = *parse_transform_kind(o.transform);
      const Digraph d = load_graph(o.in, o.format);
      if (o.formula) {
        out << formula_for(kind, d) << "\n";
      } else {
        SearchBudget budget;
        budget.max_nodes = o.budget_nodes;
        budget.max_seconds = std::chrono::duration<double>(o.budget_secs);
        const OracleResult r = min_gbs_cover_exact(apply_transform(kind, d), budget,
                                                   default_worker_count());
        if (r.timed_out) {
          out << nlohmann::json{{"minimum", r.minimum},
                                {"timed_out", true},
                                {"explored_nodes", r.explored_nodes}}
                     .dump()
              << "\n";
          err << "search budget exhausted; minimum is an upper bound only\n";
          return kExitDomainError;
        }
        out << r.minimum << "\n";
      }
    } else if (hcond->parsed()) {
      out << (h_condition_holds(load_graph(o.in, o.format)) ? "true" : "false") << "\n";
    } else if (repr->parsed()) {
      const Digraph h = load_graph(o.in, o.format);
      out << write_json(representation_from_cover(h, parse_cover_json(slurp(o.cover))));
    }
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace digraph_intersect::cli
