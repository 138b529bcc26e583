#include <gtest/gtest.h>

#include <vector>

#include "conefaces/gap.hpp"
#include "conefaces/linalg.hpp"

namespace conefaces {
namespace {

// Pascal's triangle, independent of the library's binomial routine.
std::int64_t pascal(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  static std::vector<std::vector<std::int64_t>> table;
  while (static_cast<std::int64_t>(table.size()) <= n) {
    const std::size_t m = table.size();
    std::vector<std::int64_t> row(m + 1, 1);
    for (std::size_t j = 1; j < m; ++j) row[j] = table[m - 1][j - 1] + table[m - 1][j];
    table.push_back(std::move(row));
  }
  return table[n][k];
}

std::int64_t direct_gap(std::int64_t n, std::int64_t two_d, std::int64_t k) {
  const std::int64_t d = two_d / 2;
  return pascal(n + two_d - 1, two_d) - k * n - pascal(pascal(n + d - 1, d) - k + 1, 2);
}

TEST(NaiveGap, Examples) {
  EXPECT_EQ(naive_gap(4, 4, 6), 1);
  EXPECT_EQ(naive_gap(3, 6, 7), 1);
  EXPECT_EQ(naive_gap(3, 6, 6), 0);
  EXPECT_EQ(naive_gap(3, 8, 11), 2);
  EXPECT_EQ(naive_gap(3, 8, 12), 3);
  EXPECT_EQ(max_independent_size(4, 4), 6);
  EXPECT_EQ(max_independent_size(3, 6), 7);
}

TEST(NaiveGap, Preconditions) {
  EXPECT_THROW(naive_gap(4, 4, 0), Error);
  EXPECT_THROW(naive_gap(4, 4, 7), Error);
  EXPECT_THROW(naive_gap(4, 5, 1), Error);
  EXPECT_THROW(naive_gap(4, 0, 1), Error);
}

TEST(NaiveGap, FullGridAgainstDirectBinomials) {
  int checked = 0;
  for (std::int64_t n = 2; n <= 5; ++n)
    for (std::int64_t two_d = 2; two_d <= 10; two_d += 2) {
      const std::int64_t d = two_d / 2;
      const std::int64_t top = pascal(n + d - 1, d) - n;
      EXPECT_EQ(max_independent_size(n, two_d), top);
      for (std::int64_t k = 1; k <= top; ++k, ++checked) EXPECT_EQ(naive_gap(n, two_d, k), direct_gap(n, two_d, k));
    }
  EXPECT_GT(checked, 100);
}

TEST(MaxGap, ClosedForms) {
  EXPECT_EQ(max_gap(4, 4).k, 6);
  EXPECT_EQ(max_gap(4, 4).value, 1);
  EXPECT_EQ(max_gap(3, 6).k, 7);
  EXPECT_EQ(max_gap(3, 6).value, 1);
  EXPECT_EQ(max_gap(3, 4).value, 0);
}

TEST(MaxGap, IsTheMaximumOverTheRange) {
  for (std::int64_t n = 2; n <= 5; ++n)
    for (std::int64_t two_d = 2; two_d <= 10; two_d += 2) {
      const auto m = max_gap(n, two_d);
      const std::int64_t top = max_independent_size(n, two_d);
      if (top < 1) continue;
      std::int64_t best = direct_gap(n, two_d, 1);
      for (std::int64_t k = 2; k <= top; ++k) best = std::max(best, direct_gap(n, two_d, k));
      EXPECT_EQ(m.value, best) << n << " " << two_d;
      EXPECT_EQ(m.k, top);
    }
}

TEST(MinKPositive, ClosedForms) {
  for (std::int64_t d = 3; d <= 6; ++d) EXPECT_EQ(min_k_positive(3, 2 * d), pascal(d + 1, 2) + 1) << d;
  EXPECT_EQ(min_k_positive(4, 4), 6);
  EXPECT_FALSE(min_k_positive(3, 4).has_value());
}

TEST(MinKPositive, AgreesWithScanOverGrid) {
  for (std::int64_t n = 2; n <= 5; ++n)
    for (std::int64_t two_d = 2; two_d <= 10; two_d += 2) {
      std::optional<std::int64_t> expected;
      for (std::int64_t k = 1; k <= max_independent_size(n, two_d); ++k)
        if (direct_gap(n, two_d, k) > 0) {
          expected = k;
          break;
        }
      EXPECT_EQ(min_k_positive(n, two_d), expected) << n << " " << two_d;
    }
}

TEST(Ternary, Predictions) {
  EXPECT_EQ(ternary_prediction(3, 6).relation, TernaryRelation::equal);
  EXPECT_EQ(ternary_prediction(3, 7).relation, TernaryRelation::strict_gap);
  EXPECT_EQ(ternary_prediction(3, 7).predicted_gap, 1);
  EXPECT_EQ(ternary_prediction(4, 10).predicted_gap, 0);
  EXPECT_EQ(ternary_prediction(4, 11).predicted_gap, 2);
  EXPECT_EQ(ternary_prediction(4, 12).predicted_gap, 3);
  EXPECT_EQ(ternary_prediction(3, 8).relation, TernaryRelation::out_of_range);
  EXPECT_FALSE(ternary_prediction(3, 8).predicted_gap.has_value());
  EXPECT_THROW(ternary_prediction(2, 3), Error);
  EXPECT_THROW(ternary_prediction(3, 0), Error);
  EXPECT_EQ(to_string(TernaryRelation::strict_gap), "strict_gap");
}

TEST(Ternary, StrictGapMatchesNaiveGap) {
  for (std::int64_t d = 3; d <= 8; ++d)
    for (std::int64_t k = 1; k <= pascal(d + 2, 2) - 3; ++k) {
      const auto t = ternary_prediction(d, k);
      if (k <= pascal(d + 1, 2)) {
        EXPECT_EQ(t.relation, TernaryRelation::equal);
        EXPECT_LE(direct_gap(3, 2 * d, k), 0);
      } else {
        EXPECT_EQ(t.relation, TernaryRelation::strict_gap);
        EXPECT_EQ(t.predicted_gap, direct_gap(3, 2 * d, k));
        EXPECT_GT(*t.predicted_gap, 0);
      }
    }
}

TEST(AhCount, Examples) {
  EXPECT_EQ(ah_count(4, 4, 6), 11);
  EXPECT_EQ(ah_count(3, 6, 7), 7);
  EXPECT_EQ(ah_count(3, 4, 10), 0);
  EXPECT_THROW(ah_count(3, 3, 1), Error);
}

TEST(GapProfile, FullAndPartialRanges) {
  const auto p = gap_profile(4, 4);
  ASSERT_EQ(p.values.size(), 6u);
  for (const auto& [k, g] : p.values) EXPECT_EQ(g, direct_gap(4, 4, k));
  EXPECT_EQ(p.k_max, 6);
  EXPECT_EQ(p.max_gap, 1);
  EXPECT_EQ(p.k_min_positive, 6);
  EXPECT_EQ(p.max_independent_hint, 6);
  if (p.max_gap > 0) {
    EXPECT_LE(*p.k_min_positive, p.k_max);
    EXPECT_LE(p.k_max, p.max_independent_hint);
  }
  const auto part = gap_profile(3, 8, 9, 12);
  ASSERT_EQ(part.values.size(), 4u);
  EXPECT_EQ(part.values.front(), (std::pair<std::int64_t, std::int64_t>{9, direct_gap(3, 8, 9)}));
  EXPECT_THROW(gap_profile(4, 4, 0, 3), Error);
  EXPECT_THROW(gap_profile(4, 4, 2, 7), Error);
  EXPECT_THROW(gap_profile(4, 4, 4, 3), Error);
}

}  // namespace
}  // namespace conefaces
