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


// Randomized properties over instances drawn by oracle::Gen, which shares no
// code with the library's own generators.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "trialoffer/analysis.hpp"
#include "trialoffer/policies.hpp"

namespace trialoffer {
namespace {

constexpr int kCases = 400;

struct Drawn {
  Market market;
  SocialState state;
  Ranking ranking;
};

Drawn draw(oracle::Gen& g, std::size_t max_n = 20, bool open_rho = false) {
  const std::size_t n = g.size(1, max_n);
  double rho = g.real(0.0, 1.0);
  if (open_rho) rho = std::clamp(rho, 1e-6, 1.0 - 1e-6);
  Market m(g.reals(n, 0.0, 1.0), g.reals(n, 0.05, 5.0),
           g.decreasing(n, 0.05, 1.0),
           ContinuationSpec::polynomial(rho, g.real(0.0, 3.0)));
  std::vector<std::int64_t> d(n);
  for (auto& x : d) x = static_cast<std::int64_t>(g.size(0, 30));
  const std::int64_t total = std::accumulate(d.begin(), d.end(), std::int64_t{0});
  return {std::move(m), SocialState(d, total + static_cast<std::int64_t>(g.size(0, 5))),
          Ranking::from_positions(g.permutation(n))};
}

oracle::Instance as_instance(const Drawn& x) {
  std::vector<double> a = x.market.appeal();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += x.state.downloads()[i];
  return {x.market.quality(), a, x.market.visibility(),
          x.market.continuation_probabilities()};
}

TEST(Property, ClosedFormMatchesOracle) {
  oracle::Gen g(1);
  for (int k = 0; k < kCases; ++k) {
    const Drawn x = draw(g);
    EXPECT_NEAR(expected_purchases_with_continuation(x.market, x.ranking, x.state),
                oracle::lambda_bar(as_instance(x), x.ranking.positions()), 1e-13)
        << k;
  }
}

TEST(Property, ReductionIdentity) {
  oracle::Gen g(2);
  for (int k = 0; k < kCases; ++k) {
    const Drawn x = draw(g);
    const Market folded =
        x.market.with_appeal(current_appeal(x.market, x.state));
    const double reduced = expected_purchases(reduce_market(folded), x.ranking);
    EXPECT_NEAR(reduced, oracle::lambda_bar(as_instance(x), x.ranking.positions()),
                1e-12)
        << k;
  }
}

TEST(Property, ContinuationNeverHurtsAndGrowsWithRho) {
  oracle::Gen g(3);
  for (int k = 0; k < kCases; ++k) {
    const Drawn x = draw(g);
    const auto& spec = x.market.continuation();
    const double plain = expected_purchases(x.market, x.ranking, x.state);
    const double with = expected_purchases_with_continuation(x.market, x.ranking, x.state);
    EXPECT_GE(with, plain - 1e-15);
    const Market more = x.market.with_continuation(ContinuationSpec::polynomial(
        std::min(1.0, spec.rho() + 0.1), spec.r()));
    EXPECT_GE(expected_purchases_with_continuation(more, x.ranking, x.state),
              with - 1e-15);
  }
}

TEST(Property, NextPurchaseLawIgnoresContinuation) {
  oracle::Gen g(4);
  for (int k = 0; k < kCases; ++k) {
    const Drawn x = draw(g);
    const auto inst = as_instance(x);
    std::vector<double> w(inst.q.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = inst.v[x.ranking.position_of(i)] * inst.a[i] * inst.q[i];
    }
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    if (total == 0.0) continue;
    const auto law = next_purchase_distribution(x.market, x.ranking, x.state);
    for (std::size_t i = 0; i < w.size(); ++i) {
      EXPECT_NEAR(law[i], w[i] / total, 1e-14);
    }
  }
}

TEST(Property, OptimizersAgreeWithEnumeration) {
  oracle::Gen g(5);
  for (int k = 0; k < 150; ++k) {
    const Drawn x = draw(g, 7);
    const double best = oracle::best_lambda_bar(as_instance(x));
    EXPECT_NEAR(performance_ranking_with_continuation(x.market, x.state).objective,
                best, 1e-12);
    EXPECT_NEAR(brute_force_ranking(x.market, x.state, Objective::kLambdaBar).objective,
                best, 1e-12);
  }
}

TEST(Property, BoundsHold) {
  oracle::Gen g(6);
  for (int k = 0; k < kCases; ++k) {
    const Drawn x = draw(g, 6);
    const BoundCertificate cert =
        efficiency_bounds(x.market, OptimizerMethod::kBruteForce);
    EXPECT_TRUE(cert.ok()) << k;
    const auto& spec = x.market.continuation();
    EXPECT_LE(cert.upper_factor,
              polynomial_bound_factor(spec.rho(), spec.r()) + 1e-12);
  }
}

TEST(Property, QualityOrderSurvivesReduction) {
  oracle::Gen g(7);
  for (int k = 0; k < kCases; ++k) {
    const Drawn x = draw(g, 20, true);
    EXPECT_EQ(quality_ranking(x.market), quality_ranking(reduce_market(x.market)))
        << k;
  }
}

TEST(Property, PositionBiasAndSocialInfluenceGains) {
  oracle::Gen g(8);
  for (int k = 0; k < kCases; ++k) {
    const Drawn x = draw(g);
    EXPECT_GE(position_bias_gain(x.market), -1e-12) << k;
    EXPECT_GE(si_one_step_gain(x.market, x.state), -1e-12) << k;
  }
}

TEST(Property, RankingsArePermutations) {
  oracle::Gen g(9);
  RandomStream s(9);
  for (int k = 0; k < kCases; ++k) {
    const Drawn x = draw(g);
    for (PolicyKind p : kAllPolicies) {
      const Ranking r = rank_products(p, x.market, x.state, s);
      std::vector<std::size_t> list = r.list();
      std::sort(list.begin(), list.end());
      for (std::size_t i = 0; i < list.size(); ++i) ASSERT_EQ(list[i], i);
    }
  }
}

}  // namespace
}  // namespace trialoffer
