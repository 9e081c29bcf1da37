#include "gridband/coeffs.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace gridband;
using gridband::testing::convolution_row;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
  std::vector<BigInt> v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST(CoeffRow, SmallRows) {
  EXPECT_EQ(coeff_row(2, 0).values, big({1}));
  EXPECT_EQ(coeff_row(3, 1).values, big({1, 1, 1, 1}));
  // frozen from convolution_row(2, 3)
  EXPECT_EQ(coeff_row(2, 3).values, big({1, 3, 6, 7, 6, 3, 1}));
  EXPECT_EQ(coeff_row(2, 3).values, convolution_row(2, 3));
}

TEST(CoeffRow, RejectsDegeneratePath) {
  EXPECT_THROW(coeff_row(0, 3), std::invalid_argument);
  EXPECT_THROW(coeff_row(2, -1), std::invalid_argument);
}

TEST(CoeffRow, PascalRecurrenceMatchesConvolution) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= 20; ++d) ASSERT_EQ(coeff_row(n, d).values, convolution_row(n, d)) << n << "," << d;
}

TEST(CoeffRow, SumSymmetryLogConcavity) {
  for (int n = 1; n <= 8; ++n) {
    for (int d = 0; d <= 40; ++d) {
      const auto row = coeff_row(n, d);
      ASSERT_EQ(row.size(), static_cast<std::size_t>(n * d + 1));
      const BigInt sum = std::accumulate(row.values.begin(), row.values.end(), BigInt(0));
      ASSERT_EQ(sum, big_pow(n + 1, d));
      const int top = n * d;
      for (int k = 0; k <= top; ++k) ASSERT_EQ(row.at(k), row.at(top - k));
      for (int k = 1; k < top; ++k) ASSERT_GE(row.at(k) * row.at(k), row.at(k - 1) * row.at(k + 1));
    }
  }
}

TEST(CoeffRow, NoOverflowAtLargeDegree) {
  // (1 + x)^200 has central coefficient C(200, 100) ~ 9.05e58.
  EXPECT_EQ(max_coeff(1, 200), gridband::testing::binom(200, 100));
}

TEST(Coeff, PointLookup) {
  EXPECT_EQ(coeff(2, 3, 3), 7);
  EXPECT_EQ(coeff(2, 3, -1), 0);
  EXPECT_EQ(coeff(2, 3, 7), 0);
  EXPECT_EQ(coeff(2, 3, 1), 3);
  EXPECT_EQ(coeff(2, 3, 5), 3);
}

TEST(MaxCoeff, Examples) {
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(max_coeff(n, 0), 1);
  EXPECT_EQ(max_coeff(2, 3), 7);
  EXPECT_EQ(max_coeff(1, 10), 252);
}

TEST(MaxCoeff, IsRowMaximum) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 0; d <= 15; ++d) {
      const auto r = convolution_row(n, d);
      EXPECT_EQ(max_coeff(n, d), *std::max_element(r.begin(), r.end()));
    }
}

TEST(SortedDesc, Examples) {
  EXPECT_EQ(sorted_desc(2, 2).entries, big({3, 2, 2, 1, 1}));
  EXPECT_EQ(sorted_desc(4, 0).entries, big({1}));
  EXPECT_EQ(sorted_desc(1, 3).entries, big({3, 3, 1, 1}));
  EXPECT_EQ(sorted_desc(2, 2).position(1), 3);
  EXPECT_EQ(sorted_desc(2, 2).position(6), 0);
}

TEST(TopSum, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(top_sum(n, 0), 1);
  EXPECT_EQ(top_sum(2, 2), 5);
  EXPECT_EQ(top_sum(2, 4), 35);  // 19 + 16
  for (int i = 0; i <= 20; ++i) EXPECT_EQ(top_sum(1, i), gridband::testing::binom(i, i / 2));
}

TEST(Trinomial, Examples) {
  EXPECT_EQ(trinomial_coeff(3, 3), 7);
  for (int d = 0; d <= 10; ++d) EXPECT_EQ(trinomial_coeff(d, 0), 1);
  EXPECT_EQ(trinomial_coeff(4, 4), 19);
  EXPECT_THROW(trinomial_coeff(3, 7), std::out_of_range);
  EXPECT_THROW(trinomial_coeff(3, -1), std::out_of_range);
}

TEST(Trinomial, MatchesGenericRow) {
  for (int d = 0; d <= 20; ++d) {
    const auto row = coeff_row(2, d);
    for (int k = 0; k <= 2 * d; ++k) ASSERT_EQ(trinomial_coeff(d, k), row.at(k)) << d << "," << k;
  }
}

TEST(CentralIdentity, MaxEqualsTopSumPlusNextLargest) {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= 20; ++d) {
      // at d = 1 the previous row has a single entry and position n+1 reads as zero
      const auto prev = sorted_desc(n, d - 1);
      ASSERT_EQ(max_coeff(n, d), top_sum(n, d - 1) + prev.position(static_cast<std::size_t>(n) + 1))
          << n << "," << d;
    }
  }
}

TEST(MiddleWindow, Examples) {
  EXPECT_EQ(middle_window(2, 2, 1), (DegreeInterval{2, 2}));
  EXPECT_EQ(middle_window(1, 1, 2), (DegreeInterval{0, 1}));
  const DegreeInterval w = middle_window(2, 3, 2);
  EXPECT_TRUE(w == (DegreeInterval{2, 3}) || w == (DegreeInterval{3, 4}));
  EXPECT_EQ(coeff(2, 3, w.lo) + coeff(2, 3, w.hi), 13);
}

TEST(MiddleWindow, PrefersLeftmostUnderTies) {
  // (1 + x)^3 = 1 3 3 1: both peaks tie.
  EXPECT_EQ(middle_window(1, 3, 1), (DegreeInterval{1, 1}));
  // a flat row: every window of width 2 ties.
  EXPECT_EQ(middle_window(4, 1, 2), (DegreeInterval{0, 1}));
}

TEST(MiddleWindow, RejectsOutOfRange) {
  EXPECT_THROW(middle_window(2, 2, 0), std::out_of_range);
  EXPECT_THROW(middle_window(2, 2, 6), std::out_of_range);
}

TEST(MiddleWindow, CarriesTheLargestEntries) {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= 12; ++d) {
      const auto row = coeff_row(n, d);
      const auto sorted = sorted_desc(row);
      BigInt prefix = 0;
      for (int i = 1; i <= n * d + 1; ++i) {
        prefix += sorted.entries[static_cast<std::size_t>(i) - 1];
        const DegreeInterval w = middle_window(n, d, i);
        ASSERT_EQ(w.hi - w.lo + 1, i);
        ASSERT_GE(w.lo, 0);
        ASSERT_LE(w.hi, n * d);
        BigInt s = 0;
        for (int k = w.lo; k <= w.hi; ++k) s += row.at(k);
        ASSERT_EQ(s, prefix) << n << "," << d << "," << i;
      }
    }
  }
}

TEST(CoeffTriangle, RowsMatchStandalone) {
  CoeffTriangle t(3, 9);
  EXPECT_EQ(t.d_max(), 9);
  for (int d = 0; d <= 9; ++d) EXPECT_EQ(t.row(d), coeff_row(3, d).values);
  EXPECT_EQ(t.at(2, -1), 0);
  EXPECT_EQ(t.at(2, 7), 0);
}
