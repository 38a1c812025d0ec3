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

#ifndef TRIALOFFER_ANALYSIS_HPP_
#define TRIALOFFER_ANALYSIS_HPP_

// Numeric checks of the structural results on trial-offer markets with
// continuation, and the summaries produced from simulation runs.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "trialoffer/market.hpp"
#include "trialoffer/policies.hpp"
#include "trialoffer/simulation.hpp"

namespace trialoffer {

// Slack used by every ">= 0" style certificate.
inline constexpr double kGainSlack = 1e-12;
inline constexpr double kBoundSlack = 1e-9;

// Efficiency of the optimal ranking with continuation compared to the one
// without: lambda(pi*) <= lambda_bar(pi*_c) <= lambda(pi*) / (1 - max_i c_i).
struct BoundCertificate {
  Ranking optimal;               // pi*, maximizes lambda
  Ranking optimal_continuation;  // pi*_c, maximizes lambda_bar
  double lambda_opt = 0.0;
  double lambda_bar_opt = 0.0;
  double upper_factor = 1.0;
  bool lower_ok = false;
  bool upper_ok = false;

  bool ok() const { return lower_ok && upper_ok; }
};

// Computes both optima with `method` (brute force needs n <= 10) and checks
// both inequalities within kBoundSlack.
BoundCertificate efficiency_bounds(
    const Market& market, OptimizerMethod method = OptimizerMethod::kParametric);

// 1 / (1 - rho r^r / (r+1)^(r+1)), with r^r = 1 at r = 0: the upper factor
// implied by the largest value rho * q^r (1 - q) can take on [0, 1].
// Infinite for rho = 1, r = 0.
double polynomial_bound_factor(double rho, double r);

// Ranking used by the position-bias and social-influence checks: products by
// descending continuation quality q / (1 - c). For polynomial continuation
// with rho in (0, 1] this is the quality ranking.
Ranking continuation_quality_ranking(const Market& market);

// lambda_bar under the market's visibilities and continuation_quality_ranking
// minus lambda_bar with every visibility equal. Non-negative whenever
// visibilities are non-increasing. Throws DomainError otherwise.
double position_bias_gain(const Market& market);

// Expected purchases of the next participant after one more participant has
// been served, minus the current expected purchases, with the social signal
// feeding back into appeals and the ranking held at
// continuation_quality_ranking. Evaluated in closed form; non-negative.
double si_one_step_gain(const Market& market, const SocialState& state);

struct ImprovementRow {
  double rho = 0.0;
  double r = 0.0;
  PolicyKind policy = PolicyKind::kQuality;
  double efficiency_with = 0.0;
  double efficiency_without = 0.0;
  double improvement_pct = 0.0;  // 100 (with - without) / without
};

struct ResultPair {
  const SimResult* with_continuation = nullptr;
  const SimResult* without_continuation = nullptr;
};

// One row per pair, sorted by (rho, r, policy). Throws ConfigError when a
// pair does not share products, policy, steps and replication count, when
// the baseline has continuation, or when the continuation is not polynomial.
std::vector<ImprovementRow> improvement_table(std::span<const ResultPair> pairs);

// Improvement matrix: one line per (rho, r), one column per policy.
std::string format_improvement_table(std::span<const ImprovementRow> rows);

struct ScatterRow {
  std::size_t product_id = 0;  // 1-based
  double quality = 0.0;
  std::size_t quality_rank = 0;  // 1 = lowest quality
  std::int64_t replication = 0;
  std::int64_t downloads = 0;
};

// Long-format downloads per (product, replication), ordered by ascending
// quality (ties by product index) and then replication.
std::vector<ScatterRow> download_quality_scatter(const SimResult& result,
                                                 const Market& market);

}  // namespace trialoffer

#endif  // TRIALOFFER_ANALYSIS_HPP_
