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
#include "trialoffer/policies.hpp"
#include "trialoffer/simulation.hpp"

namespace trialoffer {
namespace {

SimConfig small_config(PolicyKind policy) {
  SimConfig cfg{.market = example_market(ContinuationSpec::polynomial(0.8, 0.7))};
  cfg.policy = policy;
  cfg.steps = 500;
  cfg.rerank_period = 10;
  cfg.replications = 4;
  cfg.base_seed = 17;
  return cfg;
}

TEST(Session, PurchaseProbabilityWithContinuation) {
  // q = 0.5, c = 0.25: a session ends in a purchase with probability 2/3 and
  // takes 4/3 trials on average.
  const Market m({0.5}, {1.0}, {1.0}, ContinuationSpec::polynomial(1.0, 1.0));
  RandomStream s(5);
  const int sessions = 100000;
  int bought = 0;
  std::int64_t tries = 0;
  for (int k = 0; k < sessions; ++k) {
    const auto out = run_session(m, Ranking::identity(1), SocialState(1), s, 1000);
    bought += out.purchased.has_value();
    tries += out.tries;
    EXPECT_FALSE(out.truncated);
  }
  const double freq = static_cast<double>(bought) / sessions;
  const double se = std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / sessions);
  EXPECT_NEAR(freq, 2.0 / 3.0, 4.0 * se);
  EXPECT_NEAR(static_cast<double>(tries) / sessions, 4.0 / 3.0, 0.01);
}

TEST(Session, TruncatesAtTryLimit) {
  const Market m({0.0}, {1.0}, {1.0}, ContinuationSpec::explicit_values({0.99}));
  RandomStream s(3);
  int truncated = 0;
  for (int k = 0; k < 100; ++k) {
    const auto out = run_session(m, Ranking::identity(1), SocialState(1), s, 2);
    EXPECT_LE(out.tries, 2);
    EXPECT_FALSE(out.purchased.has_value());
    truncated += out.truncated;
  }
  EXPECT_GT(truncated, 90);
}

TEST(Session, MatchesClosedFormOnAverage) {
  const Market m = example_market(ContinuationSpec::polynomial(0.8, 0.7));
  const Ranking r = Ranking::from_list({0, 2, 1});
  RandomStream s(8);
  const int sessions = 200000;
  int bought = 0;
  for (int k = 0; k < sessions; ++k) {
    bought += run_session(m, r, SocialState(3), s, 10000).purchased.has_value();
  }
  const double lam = expected_purchases_with_continuation(m, r);
  const double se = std::sqrt(lam * (1 - lam) / sessions);
  EXPECT_NEAR(static_cast<double>(bought) / sessions, lam, 4 * se);
  // An independently coded chain lands in the same band.
  const oracle::Instance inst{m.quality(), m.appeal(), m.visibility(),
                              m.continuation_probabilities()};
  EXPECT_NEAR(oracle::monte_carlo_purchases(inst, r.positions(), sessions, 1),
              lam, 4 * se);
}

TEST(Config, Validation) {
  for (auto mutate : std::vector<void (*)(SimConfig&)>{
           [](SimConfig& c) { c.steps = 0; },
           [](SimConfig& c) { c.rerank_period = 0; },
           [](SimConfig& c) { c.replications = 0; },
           [](SimConfig& c) { c.max_session_tries = 0; },
           [](SimConfig& c) { c.trajectory_interval = -1; }}) {
    SimConfig cfg = small_config(PolicyKind::kQuality);
    mutate(cfg);
    EXPECT_THROW(cfg.validate(), ConfigError);
    EXPECT_THROW(run_replications(cfg, 1), ConfigError);
  }
}

TEST(Config, TrajectoryInterval) {
  SimConfig cfg = small_config(PolicyKind::kQuality);
  cfg.steps = 20000;
  EXPECT_EQ(cfg.effective_trajectory_interval(), 100);
  cfg.steps = 10;
  EXPECT_EQ(cfg.effective_trajectory_interval(), 1);
  cfg.trajectory_interval = 7;
  EXPECT_EQ(cfg.effective_trajectory_interval(), 7);
}

TEST(Simulation, DeterministicAndSchedulingFree) {
  for (PolicyKind p : kAllPolicies) {
    const SimConfig cfg = small_config(p);
    const SimResult a = run_replications(cfg, 1);
    const SimResult b = run_replications(cfg, 3);
    ASSERT_EQ(a.per_replication.size(), 4u);
    EXPECT_EQ(a.per_replication, b.per_replication) << policy_name(p);
    EXPECT_EQ(a.downloads_final, b.downloads_final);
    EXPECT_EQ(run_simulation(cfg, 2).per_replication[0], a.per_replication[2]);
  }
}

TEST(Simulation, SeedsDifferAcrossReplications) {
  const SimResult res = run_replications(small_config(PolicyKind::kRandom), 1);
  EXPECT_NE(res.per_replication[0].seed, res.per_replication[1].seed);
  EXPECT_NE(res.per_replication[0].downloads, res.per_replication[1].downloads);
}

TEST(Simulation, TrajectoryEndsAtTotal) {
  SimConfig cfg = small_config(PolicyKind::kPopularity);
  cfg.steps = 95;
  cfg.trajectory_interval = 10;
  const SimResult res = run_replications(cfg, 1);
  ASSERT_FALSE(res.trajectory_steps.empty());
  EXPECT_EQ(res.trajectory_steps.front(), 10);
  EXPECT_EQ(res.trajectory_steps.back(), 95);
  for (const auto& rep : res.per_replication) {
    ASSERT_EQ(rep.trajectory.size(), res.trajectory_steps.size());
    EXPECT_EQ(rep.trajectory.back(), rep.total_downloads());
    EXPECT_TRUE(std::is_sorted(rep.trajectory.begin(), rep.trajectory.end()));
  }
}

TEST(Simulation, IndependentConditionTracksClosedForm) {
  SimConfig cfg = small_config(PolicyKind::kQuality);
  cfg.social_influence = false;
  cfg.steps = 20000;
  cfg.replications = 5;
  const SimResult res = run_replications(cfg, 1);
  const double lam = expected_purchases_with_continuation(
      cfg.market, quality_ranking(cfg.market));
  const double total = cfg.steps * cfg.replications;
  const double se = std::sqrt(lam * (1 - lam) / total);
  EXPECT_NEAR(res.efficiency() / cfg.steps, lam, 4 * se);
  EXPECT_GT(res.efficiency_standard_error(), 0.0);
}

TEST(Simulation, SingleReplicationHasZeroStandardError) {
  SimConfig cfg = small_config(PolicyKind::kQuality);
  cfg.replications = 1;
  EXPECT_EQ(run_replications(cfg, 1).efficiency_standard_error(), 0.0);
}

TEST(FirstPurchase, FrequenciesFormADistribution) {
  const Market m = example_market();
  const auto f = first_purchase_frequencies(m, Ranking::identity(3),
                                            SocialState(3), 1000, 4);
  EXPECT_NEAR(std::accumulate(f.begin(), f.end(), 0.0), 1.0, 1e-12);
  const Market none({0.0}, {1.0}, {1.0});
  EXPECT_THROW(first_purchase_frequencies(none, Ranking::identity(1),
                                          SocialState(1), 10, 1),
               DomainError);
}

}  // namespace
}  // namespace trialoffer
