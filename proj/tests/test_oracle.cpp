#include "gridband/oracle.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace gridband;

TEST(BruteForce, SmallGrids) {
  const auto c22 = brute_force_bw(GridParams(2, 2));
  EXPECT_EQ(c22.status, CertificateStatus::proved);
  EXPECT_EQ(c22.optimal_value, 3u);

  const auto c12 = brute_force_bw(GridParams(1, 2));
  EXPECT_EQ(c12.status, CertificateStatus::proved);
  EXPECT_EQ(c12.optimal_value, 2u);

  const auto c13 = brute_force_bw(GridParams(1, 3));
  EXPECT_EQ(c13.status, CertificateStatus::proved);
  EXPECT_EQ(BigInt(c13.optimal_value), bw_hales(1, 3));
  EXPECT_EQ(c13.optimal_value, 4u);
}

TEST(BruteForce, PathsAndUnseededSearch) {
  for (int n = 1; n <= 6; ++n) {
    const auto c = brute_force_bw(GridParams(n, 1), {}, OracleOptions{false});
    EXPECT_EQ(c.status, CertificateStatus::proved);
    EXPECT_EQ(c.optimal_value, 1u);
  }
  for (auto p : {GridParams(1, 2), GridParams(2, 2), GridParams(1, 3), GridParams(3, 2)}) {
    const auto seeded = brute_force_bw(p);
    const auto unseeded = brute_force_bw(p, {}, OracleOptions{false});
    EXPECT_EQ(unseeded.status, CertificateStatus::proved);
    EXPECT_EQ(seeded.optimal_value, unseeded.optimal_value);
  }
}

TEST(BruteForce, WitnessRescansToOptimum) {
  for (auto p : {GridParams(2, 2), GridParams(1, 3), GridParams(3, 2), GridParams(4, 2)}) {
    const auto c = brute_force_bw(p);
    ASSERT_EQ(c.status, CertificateStatus::proved);
    EXPECT_EQ(labeling_bandwidth(c.witness()).value, c.optimal_value);
    EXPECT_LE(BigInt(c.optimal_value), labeling_bandwidth(HalesLabels{}, p).value);
  }
}

TEST(BruteForce, Deterministic) {
  const auto a = brute_force_bw(GridParams(3, 2), {}, OracleOptions{false});
  const auto b = brute_force_bw(GridParams(3, 2), {}, OracleOptions{false});
  EXPECT_EQ(a.optimal_value, b.optimal_value);
  EXPECT_EQ(a.witness_by_lex, b.witness_by_lex);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(BruteForce, BudgetExhaustionIsReported) {
  SearchBudget tiny;
  tiny.max_nodes = 5;
  const auto c = brute_force_bw(GridParams(3, 2), tiny, OracleOptions{false});
  EXPECT_EQ(c.status, CertificateStatus::budget_exhausted);
  // the best labeling found so far is still a genuine labeling with the stated bandwidth
  EXPECT_EQ(labeling_bandwidth(c.witness()).value, c.optimal_value);

  const auto v = verify_optimal(GridParams(3, 2), tiny);
  EXPECT_EQ(v.verdict, Verdict::inconclusive);
  EXPECT_FALSE(v.confirmed());
}

TEST(VerifyOptimal, Confirms) {
  EXPECT_TRUE(verify_optimal(GridParams(1, 2)).confirmed());
  EXPECT_TRUE(verify_optimal(GridParams(2, 2)).confirmed());
  const auto v = verify_optimal(GridParams(3, 2));
  EXPECT_TRUE(v.confirmed());
  EXPECT_EQ(v.formula_value, 4);
}

TEST(Certificate, RoundTrip) {
  const auto c = brute_force_bw(GridParams(2, 2));
  std::stringstream buf;
  write_certificate(buf, c);
  EXPECT_NE(buf.str().find("# value: 3"), std::string::npos);
  EXPECT_NE(buf.str().find("# status: proved"), std::string::npos);
  const auto back = read_certificate(buf);
  EXPECT_EQ(back.params, c.params);
  EXPECT_EQ(back.optimal_value, c.optimal_value);
  EXPECT_EQ(back.nodes_explored, c.nodes_explored);
  EXPECT_EQ(back.status, c.status);
  EXPECT_EQ(back.witness_by_lex, c.witness_by_lex);
}

TEST(Certificate, RejectsMissingHeader) {
  std::istringstream in("0,0\t1\n");
  EXPECT_THROW(read_certificate(in), std::invalid_argument);
}

TEST(VerifyOptimal, BeyondTheRequiredGrids) {
  // Q_4 (16 vertices) and P_2^3 (27 vertices), with the search starting from scratch.
  for (auto p : {GridParams(1, 4), GridParams(2, 3)}) {
    const auto v = verify_optimal(p, {}, OracleOptions{false});
    EXPECT_TRUE(v.confirmed()) << p.n << "," << p.d;
  }
}
