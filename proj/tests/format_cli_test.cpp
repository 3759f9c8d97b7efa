#include "jaco/format.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "jaco/table1.hpp"

namespace jaco {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult jaco_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Format, Names) {
  EXPECT_EQ(parse_output_format("dot"), OutputFormat::dot);
  EXPECT_EQ(to_string(OutputFormat::edges), "edges");
  EXPECT_FALSE(parse_output_format("xml").has_value());
}

TEST(Format, TableCsvRoundTrip) {
  const auto rows = table1_rows();
  EXPECT_EQ(render_table(rows, OutputFormat::csv), kTable1Csv);
  EXPECT_EQ(parse_param_csv(render_table(rows, OutputFormat::csv)), rows);
  EXPECT_THROW(render_table(rows, OutputFormat::dot), std::invalid_argument);
  EXPECT_THROW(parse_param_csv("n,t1\n1,2\n"), std::runtime_error);
}

TEST(Format, TableJson) {
  const auto json = nlohmann::json::parse(render_table({param_row(6)}, OutputFormat::json));
  ASSERT_EQ(json.size(), 1u);
  EXPECT_EQ(json[0].at("n"), 6);
  EXPECT_EQ(json[0].at("delta_set"), nlohmann::json::array({3, 4, 5}));
}

TEST(Format, GraphEdges) {
  EXPECT_EQ(render_graph(build_jaco(8), OutputFormat::edges), kJ8Edges);
  EXPECT_EQ(render_graph(build_jaco(1), OutputFormat::edges), "");
  EXPECT_THROW(render_graph(build_jaco(3), OutputFormat::csv), std::invalid_argument);
}

TEST(Format, DotParsesBack) {
  const JacoGraph g = build_jaco(100);
  const std::string dot = render_graph(g, OutputFormat::dot);
  EXPECT_EQ(dot.rfind("graph J100 {\n", 0), 0u);
  EXPECT_EQ(dot.substr(dot.size() - 2), "}\n");
  const std::regex node(R"(^  (\d+);$)"), edge(R"(^  (\d+) -- (\d+);$)");
  std::istringstream in(dot);
  std::int64_t nodes = 0, edges = 0;
  for (std::string line; std::getline(in, line);) {
    std::smatch m;
    if (std::regex_match(line, m, node)) {
      ++nodes;
    } else if (std::regex_match(line, m, edge)) {
      ++edges;
      EXPECT_TRUE(g.adjacent(std::stoll(m[1]), std::stoll(m[2]))) << line;
    }
  }
  EXPECT_EQ(nodes, 100);
  EXPECT_EQ(edges, g.edge_count());
}

TEST(Format, GraphJson) {
  const auto json = nlohmann::json::parse(render_graph(build_jaco(8), OutputFormat::json));
  EXPECT_EQ(json.at("n"), 8);
  EXPECT_EQ(json.at("adjacency").at(4), nlohmann::json::array({3, 4, 6, 7, 8}));
}

TEST(Format, DomPathText) {
  EXPECT_EQ(render_dompath(primary_dom_path(15)), "v1 v2 v3 v4 v7 v11 v15 | gamma: v2 v7 v15\n");
  EXPECT_EQ(render_dompath(secondary_dom_path(8)), "v8 v5 v3 v2 v1 | gamma: v5 v1\n");
}

TEST(Cli, Table) {
  const CliResult r = jaco_cli({"table", "--format", "csv"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(r.out, kTable1Csv);
  const CliResult text = jaco_cli({"table", "--max-n", "2"});
  EXPECT_EQ(text.code, cli::kExitOk);
  EXPECT_NE(text.out.find("{v1,v2}"), std::string::npos) << text.out;
}

TEST(Cli, GraphAndDomPath) {
  EXPECT_EQ(jaco_cli({"graph", "--n", "8"}).out, kJ8Edges);
  EXPECT_EQ(jaco_cli({"graph", "--n", "1"}).out, "");
  EXPECT_EQ(jaco_cli({"dompath", "--n", "8"}).out, "v1 v2 v3 v4 v7 v8 | gamma: v2 v7\n");
  EXPECT_EQ(jaco_cli({"dompath", "--n", "15", "--secondary"}).out, "v15 v9 v6 v5 v3 v2 v1 | gamma: v9 v3 v1\n");
}

TEST(Cli, Seq) {
  EXPECT_EQ(jaco_cli({"seq", "--id", "A000149", "--count", "6"}).out, "2 7 20 54 148 403\n");
  EXPECT_EQ(jaco_cli({"seq", "--id", "A003622", "--count", "3", "--artificial"}).out, "1 1 4 6\n");
  EXPECT_EQ(jaco_cli({"seq", "--id", "A0"}).code, cli::kExitUsage);
}

TEST(Cli, CheckExitCodes) {
  const CliResult verified = jaco_cli({"check", "--max-n", "32", "--conjecture", "C2"});
  EXPECT_EQ(verified.code, cli::kExitOk);
  EXPECT_EQ(verified.out.rfind("C2 range=[", 0), 0u) << verified.out;
  const CliResult refuted = jaco_cli({"check", "--max-n", "32", "--conjecture", "C6", "--format", "json"});
  EXPECT_EQ(refuted.code, cli::kExitCounterexample);
  EXPECT_EQ(nlohmann::json::parse(refuted.out).at(0).at("witness").at("index"), 21);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(jaco_cli({"table", "--max-n", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(jaco_cli({"check", "--max-n", "5"}).code, cli::kExitUsage);
  EXPECT_EQ(jaco_cli({"check", "--conjecture", "C9"}).code, cli::kExitUsage);
  EXPECT_EQ(jaco_cli({"graph"}).code, cli::kExitUsage);
  EXPECT_EQ(jaco_cli({"graph", "--n", "4", "--format", "csv"}).code, cli::kExitUsage);
  EXPECT_EQ(jaco_cli({}).code, cli::kExitUsage);
  EXPECT_EQ(jaco_cli({"bogus"}).code, cli::kExitUsage);
}

}  // namespace
}  // namespace jaco
