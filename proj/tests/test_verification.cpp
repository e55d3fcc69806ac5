#include <gtest/gtest.h>

#include "irreg/generators.hpp"
#include "irreg/io.hpp"
#include "irreg/isomorphism.hpp"
#include "irreg/verification.hpp"

using namespace irreg;

namespace {

std::vector<std::string> all_claims() { return {claim_ids.begin(), claim_ids.end()}; }

// hub 0 joined to a cycle on 1..n-1
Graph wheel(std::size_t n) {
  std::vector<edge> e;
  for (vertex v = 1; v < n; ++v) {
    e.emplace_back(0, v);
    e.emplace_back(v, v + 1 < n ? v + 1 : 1);
  }
  return Graph(n, e);
}

bool has_witness_like(const VerificationReport& r, const Graph& h) {
  for (const auto& s : r.witnesses) {
    const Graph g = parse_graph6(s);
    if (g.order() == h.order() && is_isomorphic_to(g, h)) return true;
  }
  return false;
}

}  // namespace

TEST(Verification, AllClaimsPassUpToSix) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto reports = verify_claims(all_claims(), n);
    ASSERT_EQ(reports.size(), claim_ids.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
      EXPECT_EQ(reports[i].claim_id, claim_ids[i]);
      EXPECT_EQ(reports[i].n, n);
      EXPECT_TRUE(reports[i].passed) << reports[i].claim_id << " n=" << n;
      EXPECT_EQ(reports[i].violations, 0u);
    }
  }
}

TEST(Verification, LemmaN0WitnessIsAntiregular) {
  const auto r = verify_claim("lemma_n0", 6);
  EXPECT_EQ(r.graphs_checked, 26704u);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_TRUE(is_isomorphic_to(parse_graph6(r.witnesses[0]), antiregular(6)));
}

TEST(Verification, PropBoundsCountsExtremes) {
  const auto r = verify_claim("prop_bounds", 5);
  EXPECT_TRUE(r.passed);
  // connected regular 5-vertex graphs: K5 and the 12 labeled 5-cycles
  EXPECT_EQ(r.stats.at("labeled_regular"), 13);
  // A_5 has 5!/2 = 60 labelings (the two degree-2 vertices swap)
  EXPECT_EQ(r.stats.at("labeled_antiregular"), 60);
}

TEST(Verification, LemmaDeltaEqualityCases) {
  // one universal vertex over a regular rest: star, wheel
  const auto r = verify_claim("lemma_delta", 6);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(has_witness_like(r, star(6)));
  EXPECT_TRUE(has_witness_like(r, wheel(6)));
}

TEST(Verification, IrrtNotUniqueAtSix) {
  const auto r = verify_claim("irrt_not_unique", 6);
  EXPECT_EQ(r.stats.at("max_irr_t"), 26);
  EXPECT_GE(r.stats.at("non_antiregular_maximizer_classes"), 3);
  EXPECT_GE(r.stats.at("maximizer_classes"), 4);
  EXPECT_TRUE(has_witness_like(r, antiregular(6)));
}

TEST(Verification, EdgeDeletedRegularValues) {
  const auto r = verify_claim("cor_edge_deleted", 6);
  EXPECT_TRUE(r.passed);
  EXPECT_GT(r.stats.at("edge_deletions"), 0);
  EXPECT_EQ(r.stats.at("n0"), 7);
}

TEST(Verification, TableMatchFindsAllFourRows) {
  const auto r = table_match(6, equal_irrt_reference_rows());
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.witnesses.size(), 4u);
  EXPECT_EQ(r.witness_labels, (std::vector<std::string>{"G1", "G2", "G3", "G4"}));
  EXPECT_TRUE(is_isomorphic_to(parse_graph6(r.witnesses[0]), antiregular(6)));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      EXPECT_FALSE(is_isomorphic_to(parse_graph6(r.witnesses[i]), parse_graph6(r.witnesses[j])));
}

TEST(Verification, TableMatchRejectsImpossibleRow) {
  auto rows = equal_irrt_reference_rows();
  rows[1].irr_t = 1;  // odd irr_t never occurs
  const auto r = table_match(6, rows);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.violations, 1u);
  EXPECT_EQ(r.witnesses.size(), 3u);
}

TEST(Verification, Errors) {
  EXPECT_THROW(verify_claim("no_such_claim", 5), domain_error);
  EXPECT_THROW(verify_claim("table_match", 5), domain_error);
  EXPECT_THROW(verify_claim("lemma_n0", 2), domain_error);
  EXPECT_THROW(verify_claim("lemma_n0", 9), domain_error);
  EXPECT_THROW(table_match(7, equal_irrt_reference_rows()), domain_error);
  EXPECT_TRUE(is_claim_id("prop_lower"));
  EXPECT_FALSE(is_claim_id("prop_upper"));
}

TEST(Verification, DeterministicAcrossRunsAndThreads) {
  VerifyOptions one;
  one.parallel.threads = 1;
  VerifyOptions many;
  many.parallel.threads = 8;
  const auto a = verify_claims(all_claims(), 6, one);
  const auto b = verify_claims(all_claims(), 6, many);
  const auto c = verify_claims(all_claims(), 6, many);
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
}
