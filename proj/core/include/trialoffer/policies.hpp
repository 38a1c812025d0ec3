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

#ifndef TRIALOFFER_POLICIES_HPP_
#define TRIALOFFER_POLICIES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "trialoffer/market.hpp"
#include "trialoffer/random.hpp"

namespace trialoffer {

enum class PolicyKind { kPerformance, kQuality, kPopularity, kRandom };

inline constexpr PolicyKind kAllPolicies[] = {
    PolicyKind::kPerformance, PolicyKind::kQuality, PolicyKind::kPopularity,
    PolicyKind::kRandom};

// "performance", "quality", "popularity", "random".
std::string_view policy_name(PolicyKind kind);
// Short labels used in tables: P-rank, Q-rank, D-rank, R-rank.
std::string_view policy_label(PolicyKind kind);
// Accepts names and labels, case-insensitively.
std::optional<PolicyKind> parse_policy(std::string_view text);

enum class OptimizerMethod { kParametric, kBruteForce };
enum class Objective { kLambda, kLambdaBar };

struct OptimizerReport {
  Ranking ranking;
  // Recomputed from `ranking` with expected_purchases (kLambda) or
  // expected_purchases_with_continuation (kLambdaBar).
  double objective = 0.0;
  std::int64_t iterations = 0;
  OptimizerMethod method = OptimizerMethod::kParametric;
};

// Products by descending quality; ties by ascending index.
Ranking quality_ranking(const Market& market);

// Products by descending downloads; ties by descending appeal A_i, then
// ascending index.
Ranking popularity_ranking(const Market& market, const SocialState& state);

// Uniform permutation by Fisher-Yates on `stream`. n >= 1.
Ranking random_ranking(std::size_t n, RandomStream& stream);

// Ranking maximizing expected_purchases on a market without continuation
// (reduced markets qualify). Throws DomainError if `market` has
// continuation; use performance_ranking_with_continuation then.
//
// Parametric ascent: for the current ratio lambda the permutation
// maximizing sum_i v_{sigma_i} a_i (q_i - lambda) pairs positions by
// descending visibility with products by descending a_i (q_i - lambda).
// Re-evaluating the ratio at that permutation never decreases it, and a
// stationary lambda is optimal. Starts from the quality ranking.
OptimizerReport performance_ranking(const Market& market,
                                    const SocialState& state);
OptimizerReport performance_ranking(const Market& market);

// Ranking maximizing expected_purchases_with_continuation. Folds the social
// state into the appeals, reduces the market and runs the parametric ascent
// there; the reported objective is evaluated on the original market.
OptimizerReport performance_ranking_with_continuation(
    const Market& market, const SocialState& state);
OptimizerReport performance_ranking_with_continuation(const Market& market);

inline constexpr std::size_t kBruteForceMaxProducts = 10;

// Exhaustive search over all n! rankings. Ties resolve to the
// lexicographically smallest position vector. Throws SizeError for
// n > kBruteForceMaxProducts.
OptimizerReport brute_force_ranking(const Market& market,
                                    const SocialState& state,
                                    Objective objective);

// Ranking chosen by `policy` for the current state. Performance uses the
// continuation-aware optimizer when the market has continuation. Only
// kRandom consumes `stream`.
Ranking rank_products(PolicyKind policy, const Market& market,
                      const SocialState& state, RandomStream& stream);

}  // namespace trialoffer

#endif  // TRIALOFFER_POLICIES_HPP_
