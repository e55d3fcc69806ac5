#include <gtest/gtest.h>

#include <sstream>

#include "irreg/generators.hpp"
#include "irreg/report_io.hpp"
#include "oracles.hpp"

using namespace irreg;

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string f; std::getline(ss, f, ',');) out.push_back(f);
  return out;
}

}  // namespace

TEST(ReportJson, FullReportFields) {
  const auto j = to_json(compute_all(antiregular(6)));
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["m"], 9);
  EXPECT_EQ(j["irr_t"], 26);
  EXPECT_EQ(j["n0"], 1);
  EXPECT_EQ(j["degset_minus_1"], 4);
  EXPECT_NEAR(j["ira"].get<double>(), 14.0, 1e-12);
  EXPECT_TRUE(j["connected"].get<bool>());
  EXPECT_FALSE(j["cs"].is_null());
  MeasureOptions no_spec;
  no_spec.spectral = false;
  const auto k = to_json(compute_all(antiregular(6), no_spec));
  EXPECT_TRUE(k["cs"].is_null());
  EXPECT_TRUE(k["rho"].is_null());
}

TEST(ReportJson, SelectedFieldsAreRounded) {
  const auto j = to_json(compute_all(antiregular(6)), {"irb", "gini", "m"}, 3);
  EXPECT_EQ(j.size(), 3u);
  EXPECT_DOUBLE_EQ(j["irb"].get<double>(), 0.933);
  EXPECT_DOUBLE_EQ(j["gini"].get<double>(), 0.241);
  EXPECT_EQ(j["m"], 9);
}

TEST(ReportCsv, HeaderAndRow) {
  const auto fields = default_csv_fields();
  EXPECT_EQ(csv_header(fields), "n,m,irr_t,degset_minus_1,cs,albertson,sigma,var,s,gini,rho,n0,ira,irb");
  EXPECT_EQ(csv_row(compute_all(antiregular(6)), fields),
            "6,9,26,4,0.404,16,40,1.667,6.000,0.241,0.304,1,14.000,0.933");
}

TEST(ReportCsv, UnavailableIsNA) {
  MeasureOptions opt;
  opt.spectral = false;
  EXPECT_EQ(csv_row(compute_all(complete(2), opt), {"cs", "rho", "gini"}), "NA,NA,0.000");
}

TEST(ReportCsv, ParsedBackMatchesRoundedValues) {
  const auto fields = default_csv_fields();
  for (const auto& g : oracle::random_connected_graphs(200, 3, 10, 77)) {
    const auto r = compute_all(g);
    const auto cells = split_csv(csv_row(r, fields, 4));
    ASSERT_EQ(cells.size(), fields.size());
    for (std::size_t i = 0; i < fields.size(); ++i) {
      const auto v = measure_value(r, fields[i]);
      ASSERT_TRUE(v.has_value());
      if (is_integer_measure(fields[i]))
        ASSERT_EQ(std::stoll(cells[i]), static_cast<long long>(*v)) << fields[i];
      else
        ASSERT_NEAR(std::stod(cells[i]), round_to(*v, 4), 1e-12) << fields[i];
    }
  }
}

TEST(VerificationText, PassAndFailLines) {
  VerificationReport r;
  r.claim_id = "lemma_n0";
  r.n = 4;
  r.graphs_checked = 38;
  r.passed = true;
  r.witnesses = {"C]"};
  r.witness_labels = {"n0=1"};
  r.stats["labeled_equality_graphs"] = 12;
  const auto text = to_text(r);
  EXPECT_EQ(text.rfind("PASS lemma_n0 n=4 graphs=38 violations=0\n", 0), 0u);
  EXPECT_NE(text.find("witness n0=1 C]"), std::string::npos);
  r.passed = false;
  r.violations = 2;
  EXPECT_EQ(to_text(r).rfind("FAIL ", 0), 0u);
  const auto j = to_json(r);
  EXPECT_EQ(j["witnesses"][0]["graph6"], "C]");
  EXPECT_EQ(j["stats"]["labeled_equality_graphs"], 12);
  EXPECT_FALSE(j["passed"].get<bool>());
}

TEST(SpectrumJson, Counts) {
  const auto j = to_json(nk_spectrum(degree_sequence(antiregular(6))));
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["counts"]["0"], 1);
}
