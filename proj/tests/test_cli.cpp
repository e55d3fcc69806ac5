#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace irreg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "irreg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("irreg_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

// The four 6-vertex graphs with irr_t = 26.
const std::string equal_irrt = "E~q?\nE}a?\nE}q?\nE~a?\n";

}  // namespace

TEST(Cli, ComputeCsvOnAntiregular) {
  const auto r = run({"compute", "--output", "csv", "-"}, "E~q?\n");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "n,m,irr_t,degset_minus_1,cs,albertson,sigma,var,s,gini,rho,n0,ira,irb\n"
            "6,9,26,4,0.404,16,40,1.667,6.000,0.241,0.304,1,14.000,0.933\n");
}

TEST(Cli, ComputeJsonSelectedMeasures) {
  const auto r = run({"compute", "--output", "json", "--measures", "ira,irb,n0"}, "E~q?\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["graph"], "-:1");
  EXPECT_DOUBLE_EQ(j[0]["ira"].get<double>(), 14.0);
  EXPECT_EQ(j[0]["n0"], 1);
}

TEST(Cli, ComputeEdgelistFile) {
  const auto path = temp_file("p4.txt", "n 4\n0 1\n1 2\n2 3\n");
  const auto r = run({"compute", "--format", "edgelist", "--output", "csv", "--measures", "m,irr_t", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "m,irr_t\n3,4\n");
}

TEST(Cli, RankByIrrtReportsTie) {
  const auto r = run({"rank", "--by", "irr_t"}, equal_irrt);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("tie: 4 graphs share irr_t = 26 at rank 1"), std::string::npos) << r.out;
}

TEST(Cli, RankByIraAndIrbAgree) {
  auto order = [](const std::string& by) {
    const auto r = run({"rank", "--by", by, "--output", "json"}, equal_irrt);
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["tie_groups"], 0);
    std::vector<std::string> labels;
    for (const auto& g : j["groups"]) labels.push_back(g["graphs"][0]);
    return labels;
  };
  const auto a = order("ira");
  EXPECT_EQ(a, (std::vector<std::string>{"-:1", "-:2", "-:3", "-:4"}));
  EXPECT_EQ(a, order("irb"));
}

TEST(Cli, RankTextListsStrictOrder) {
  const auto r = run({"rank", "--by", "ira"}, equal_irrt);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ties: none"), std::string::npos);
  const auto at = [&](const char* v) { return r.out.find(std::string(" ") + v + "  -:"); };
  EXPECT_LT(at("14.000"), at("6.500"));
  EXPECT_LT(at("6.500"), at("4.000"));
  EXPECT_LT(at("4.000"), at("2.750"));
  EXPECT_NE(at("2.750"), std::string::npos);
}

TEST(Cli, Spectrum) {
  const auto r = run({"spectrum", "--output", "json"}, "E~q?\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["counts"]["0"], 1);
}

TEST(Cli, GenerateFeedsCompute) {
  const auto g = run({"generate", "--family", "antiregular", "--n", "6"});
  ASSERT_EQ(g.code, 0);
  EXPECT_EQ(g.out, emit_graph6(antiregular(6)) + "\n");
  const auto c = run({"compute", "--output", "csv", "--measures", "n0,ira"}, g.out);
  EXPECT_EQ(c.out, "n0,ira\n1,14.000\n");
  const auto e = run({"generate", "--family", "gnp", "--n", "8", "--p", "0.4", "--seed", "7",
                      "--format", "edgelist"});
  EXPECT_EQ(e.out.rfind("n 8\n0 1\n", 0), 0u);
}

TEST(Cli, VerifyPassesWithExitZero) {
  const auto r = run({"verify", "--claims", "all", "--n", "3-4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("all claims passed"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyJson) {
  const auto r = run({"verify", "--claims", "lemma_n0,prop_bounds", "--n", "5", "--output", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["claim_id"], "lemma_n0");
  EXPECT_EQ(j[1]["graphs_checked"], 728);
}

TEST(Cli, ExitStatusForFailedClaims) {
  VerificationReport ok;
  ok.passed = true;
  VerificationReport bad;
  EXPECT_EQ(cli::exit_status({ok, ok}), cli::exit_ok);
  EXPECT_EQ(cli::exit_status({ok, bad}), cli::exit_failed_claims);
  EXPECT_EQ(cli::exit_failed_claims, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"compute", "--help"}).code, 0);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"compute", "/nonexistent/graphs.g6"}).code, 1);
  EXPECT_EQ(run({"compute"}, "B!\n").code, 1);
  EXPECT_EQ(run({"compute", "--measures", "bogus"}, "Bw\n").code, 1);
  EXPECT_EQ(run({"rank", "--by", "bogus"}, "Bw\n").code, 1);
  EXPECT_EQ(run({"verify", "--claims", "bogus"}).code, 1);
  EXPECT_EQ(run({"verify", "--n", "9"}).code, 1);
  EXPECT_EQ(run({"verify", "--claims", "table_match", "--n", "5"}).code, 1);
  EXPECT_EQ(run({"compute"}, "").code, 1);
}

TEST(Cli, ErrorsNameTheInputLine) {
  const auto r = run({"compute"}, "Bw\nB!\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("-:2"), std::string::npos) << r.err;
}

TEST(Cli, DisconnectedInputIsFlagged) {
  const auto r = run({"compute", "--format", "edgelist", "--output", "json", "--measures", "connected,irr_t"},
                     "n 4\n0 1\n2 3\n");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j[0]["connected"].get<bool>());
  EXPECT_EQ(j[0]["irr_t"], 0);
}

TEST(Cli, ParseOrders) {
  EXPECT_EQ(cli::parse_orders("3-5"), (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_EQ(cli::parse_orders("3,6"), (std::vector<std::size_t>{3, 6}));
  EXPECT_THROW(cli::parse_orders("x"), cli::usage_error);
}
