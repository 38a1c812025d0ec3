// Copyright 2026 The trialoffer Authors
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

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "trialoffer/errors.hpp"
#include "trialoffer/generators.hpp"
#include "trialoffer/market.hpp"

namespace trialoffer {
namespace {

Market two_products(ContinuationSpec c = ContinuationSpec::none()) {
  return Market({0.5, 0.25}, {1.0, 3.0}, {1.0, 0.5}, std::move(c));
}

TEST(Continuation, PolynomialValues) {
  EXPECT_DOUBLE_EQ(continuation_probability(0.5, 1.0, 1.0), 0.25);
  EXPECT_DOUBLE_EQ(continuation_probability(0.5, 0.8, 0.0), 0.4);
  // q^0 is one even at q = 0.
  EXPECT_DOUBLE_EQ(continuation_probability(0.0, 0.7, 0.0), 0.7);
  EXPECT_DOUBLE_EQ(continuation_probability(0.0, 0.7, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(continuation_probability(1.0, 1.0, 0.5), 0.0);
}

TEST(Continuation, RejectsBadParameters) {
  EXPECT_THROW(ContinuationSpec::polynomial(-0.1, 1.0), DomainError);
  EXPECT_THROW(ContinuationSpec::polynomial(1.1, 1.0), DomainError);
  EXPECT_THROW(ContinuationSpec::polynomial(0.5, -1.0), DomainError);
}

TEST(MarketTest, ValidatesFields) {
  EXPECT_THROW(Market({1.2}, {1.0}, {1.0}), DomainError);
  EXPECT_THROW(Market({-0.1}, {1.0}, {1.0}), DomainError);
  EXPECT_THROW(Market({0.5}, {0.0}, {1.0}), DomainError);
  EXPECT_THROW(Market({0.5}, {1.0}, {0.0}), DomainError);
  EXPECT_THROW(Market({0.5, 0.5}, {1.0}, {1.0, 0.5}), DomainError);
  EXPECT_THROW(Market({}, {}, {}), DomainError);
  EXPECT_THROW(Market({0.5}, {std::nan("")}, {1.0}), DomainError);
}

TEST(MarketTest, VisibilityOrderIsEnforcedUnlessAllowed) {
  EXPECT_THROW(Market({0.5, 0.5}, {1.0, 1.0}, {0.5, 1.0}), DomainError);
  const Market m({0.5, 0.5}, {1.0, 1.0}, {0.5, 1.0}, ContinuationSpec::none(),
                 {.allow_unsorted_visibility = true});
  EXPECT_TRUE(m.allows_unsorted_visibility());
}

TEST(MarketTest, ExplicitContinuationMustLeaveRoomForPurchase) {
  EXPECT_THROW(two_products(ContinuationSpec::explicit_values({0.6, 0.1})),
               DomainError);
  EXPECT_THROW(two_products(ContinuationSpec::explicit_values({0.1})),
               DomainError);
  const Market m = two_products(ContinuationSpec::explicit_values({0.5, 0.75}));
  EXPECT_DOUBLE_EQ(m.max_continuation(), 0.75);
}

TEST(RankingTest, InverseIsConsistent) {
  const Ranking r = Ranking::from_list({2, 0, 1});
  EXPECT_EQ(r.position_of(2), 0u);
  EXPECT_EQ(r.position_of(0), 1u);
  EXPECT_EQ(r.product_at(2), 1u);
  EXPECT_EQ(Ranking::from_positions(r.positions()), r);
  EXPECT_THROW(Ranking::from_positions({0, 0, 1}), DomainError);
  EXPECT_THROW(Ranking::from_list({0, 3}), DomainError);
}

TEST(SocialStateTest, RejectsInconsistentCounts) {
  EXPECT_THROW(SocialState({-1, 0}, 0), DomainError);
  EXPECT_THROW(SocialState({2, 2}, 3), DomainError);
  SocialState s({1, 2}, 5);
  s.advance_with_purchase(0);
  s.advance();
  EXPECT_EQ(s.total_downloads(), 4);
  EXPECT_EQ(s.step(), 7);
}

TEST(Formulas, ExampleInstanceWithoutContinuation) {
  const Market m = example_market();
  const Ranking id = Ranking::identity(3);
  const auto p = try_probabilities(m, id);
  // Weights 0.72, 0.05, 0.03 over 0.8.
  EXPECT_NEAR(p[0], 0.9, 1e-15);
  EXPECT_NEAR(p[1], 0.0625, 1e-15);
  EXPECT_NEAR(p[2], 0.0375, 1e-15);
  EXPECT_NEAR(expected_purchases(m, id), 0.845, 1e-15);
  EXPECT_DOUBLE_EQ(expected_purchases_with_continuation(m, id),
                   expected_purchases(m, id));
}

TEST(Formulas, DownloadsAddToAppeal) {
  const Market m = two_products();
  const SocialState s({3, 1}, 4);
  const auto a = current_appeal(m, s);
  EXPECT_DOUBLE_EQ(a[0], 4.0);
  EXPECT_DOUBLE_EQ(a[1], 4.0);
  const auto p = try_probabilities(m, Ranking::identity(2), s);
  EXPECT_NEAR(p[0], 2.0 / 3.0, 1e-15);
}

TEST(Formulas, ContinuationMatchesOracle) {
  const Market m = example_market(ContinuationSpec::polynomial(0.8, 0.7));
  const oracle::Instance inst{m.quality(), m.appeal(), m.visibility(),
                              m.continuation_probabilities()};
  for (const auto& pos : std::vector<std::vector<std::size_t>>{
           {0, 1, 2}, {0, 2, 1}, {2, 1, 0}}) {
    const Ranking r = Ranking::from_positions(pos);
    EXPECT_NEAR(expected_purchases_with_continuation(m, r),
                oracle::lambda_bar(inst, pos), 1e-15);
  }
}

TEST(Formulas, FixedPointAgreesAndCountsIterations) {
  const Market m = two_products(ContinuationSpec::explicit_values({0.4, 0.7}));
  const Ranking id = Ranking::identity(2);
  const auto fp = lambda_fixed_point(m, id, SocialState(2), 1e-14);
  EXPECT_NEAR(fp.value, expected_purchases_with_continuation(m, id), 1e-12);
  EXPECT_GT(fp.iterations, 1);
  EXPECT_THROW(lambda_fixed_point(m, id, SocialState(2), 0.0), DomainError);
}

TEST(Reduction, HalfQualityFullContinuation) {
  const Market m({0.5}, {2.0}, {1.0}, ContinuationSpec::polynomial(1.0, 1.0));
  const Market red = reduce_market(m);
  EXPECT_NEAR(red.quality()[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(red.appeal()[0], 1.5, 1e-15);
  EXPECT_TRUE(red.is_reduced());
  EXPECT_TRUE(red.continuation().is_none());
}

TEST(Reduction, NoContinuationIsIdentity) {
  const Market m = example_market();
  const Market red = reduce_market(m);
  EXPECT_EQ(red.quality(), m.quality());
  EXPECT_EQ(red.appeal(), m.appeal());
  EXPECT_EQ(red.visibility(), m.visibility());
}

TEST(Reduction, ReducedQualityMayExceedOneButStaysFinite) {
  const Market m({0.4}, {1.0}, {1.0}, ContinuationSpec::explicit_values({0.6}));
  EXPECT_DOUBLE_EQ(reduce_market(m).quality()[0], 1.0);
}

TEST(EffectiveSample, SumsToExpectedTrials) {
  const Market m = example_market(ContinuationSpec::polynomial(0.8, 0.7));
  const Ranking id = Ranking::identity(3);
  const auto p = try_probabilities(m, id);
  const auto c = m.continuation_probabilities();
  double stay = 0.0;
  for (std::size_t i = 0; i < 3; ++i) stay += p[i] * c[i];
  const auto pbar = effective_sample_probabilities(m, id, SocialState(3));
  EXPECT_NEAR(std::accumulate(pbar.begin(), pbar.end(), 0.0),
              1.0 / (1.0 - stay), 1e-14);
}

TEST(NextPurchase, ProportionalToVisibilityAppealQuality) {
  const Market m = example_market();
  const auto law = next_purchase_distribution(m, Ranking::identity(3),
                                              SocialState(3));
  // 0.648, 0.01, 0.018 over 0.676.
  EXPECT_NEAR(law[0], 0.648 / 0.676, 1e-15);
  EXPECT_NEAR(law[1], 0.010 / 0.676, 1e-15);
  EXPECT_NEAR(law[2], 0.018 / 0.676, 1e-15);
}

TEST(NextPurchase, UndefinedWithoutPurchasableProducts) {
  const Market m({0.0, 0.0}, {1.0, 1.0}, {1.0, 0.5});
  EXPECT_THROW(next_purchase_distribution(m, Ranking::identity(2),
                                          SocialState(2)),
               DomainError);
}

TEST(MarketTest, ContinuationSwapKeepsOtherFields) {
  const Market m = example_market();
  const Market c = m.with_continuation(ContinuationSpec::polynomial(0.5, 1.0));
  EXPECT_EQ(c.quality(), m.quality());
  EXPECT_EQ(c.without_continuation(), m);
  EXPECT_NE(c, m);
}

}  // namespace
}  // namespace trialoffer
