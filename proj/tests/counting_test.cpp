// Copyright 2026 The dagcount Authors
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

#include <gtest/gtest.h>

#include "dagcount/counting.hpp"
#include "dagcount/search.hpp"

namespace dagcount {
namespace {

Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

TEST(RobinsonTest, OpeningValues) {
  const auto r = robinson_sequence(5);
  const std::vector<BigCount> expected{1, 1, 3, 25, 543, 29281};
  EXPECT_EQ(r, expected);
  EXPECT_EQ(robinson_sequence(0), std::vector<BigCount>{1});
  EXPECT_THROW(robinson_sequence(-1), std::invalid_argument);
}

TEST(RobinsonTest, SixMatchesEnumeration) {
  EXPECT_EQ(robinson_sequence(6)[6], count_labeled_dags(6));
  EXPECT_EQ(robinson_sequence(6)[6], 3781503);
}

TEST(RobinsonTest, GrowthBounds) {
  const auto r = robinson_sequence(30);
  for (int n = 1; n <= 30; ++n) {
    const auto& rn = r[static_cast<std::size_t>(n)];
    if (n >= 2) EXPECT_GT(rn, r[static_cast<std::size_t>(n - 1)]);
    BigInt all_matrices;
    mpz_ui_pow_ui(all_matrices.get_mpz_t(), 2, static_cast<unsigned long>(n * n));
    EXPECT_LE(rn, all_matrices);
    EXPECT_LE(rn, labeled_weight(n));
  }
}

TEST(RationalSeriesTest, InverseOfOneMinusX) {
  RationalSeries s(5);
  s[0] = 1;
  s[1] = -1;
  const auto inv = s.inverse();
  for (int i = 0; i <= 5; ++i) EXPECT_EQ(inv[i], 1);
  const auto one = s * inv;
  EXPECT_EQ(one[0], 1);
  for (int i = 1; i <= 5; ++i) EXPECT_EQ(one[i], 0);
  EXPECT_THROW(RationalSeries(3).inverse(), std::domain_error);
}

TEST(GeneratingFunctionTest, IdentityHolds) {
  for (int order = 0; order <= 12; ++order) EXPECT_TRUE(gf_identity_check(order)) << order;
}

TEST(GeneratingFunctionTest, PerturbedValueIsCaught) {
  auto r = robinson_sequence(5);
  r[5] = 29282;
  EXPECT_FALSE(gf_identity_check(5, r));
  EXPECT_THROW(gf_identity_check(5, std::span<const BigCount>(r.data(), 3)), std::invalid_argument);
}

TEST(AsymptoticTest, DirectFormula) {
  // 1 / (0.474 * 1.488) = 1000000 / 705312
  EXPECT_EQ(asymptotic_estimate(1), frac(1000000, 705312));
  Rational five(120 * 1024);
  const Rational p = frac(1488, 1000);
  five /= frac(474, 1000) * p * p * p * p * p;
  EXPECT_EQ(asymptotic_estimate(5), five);
  EXPECT_THROW(asymptotic_estimate(0), std::invalid_argument);
}

TEST(AsymptoticTest, RatioStaysNearPublishedLevel) {
  // Only a coarse sanity band; the printed constants are truncated.
  const auto r = robinson_sequence(14);
  for (int n = 6; n <= 14; ++n) {
    Rational ratio = Rational(r[static_cast<std::size_t>(n)]) / asymptotic_estimate(n);
    EXPECT_GT(ratio, frac(1, 2));
    EXPECT_LT(ratio, frac(3, 2));
  }
}

}  // namespace
}  // namespace dagcount
