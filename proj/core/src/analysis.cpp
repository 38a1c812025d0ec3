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

#include "trialoffer/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

#include "trialoffer/errors.hpp"

namespace trialoffer {

namespace {

std::vector<std::size_t> ascending_quality_order(const Market& market) {
  const auto& q = market.quality();
  std::vector<std::size_t> order(market.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return q[a] < q[b]; });
  return order;
}

bool same_products(const Market& a, const Market& b) {
  return a.quality() == b.quality() && a.appeal() == b.appeal() &&
         a.visibility() == b.visibility();
}

}  // namespace

BoundCertificate efficiency_bounds(const Market& market,
                                   OptimizerMethod method) {
  const Market base = market.without_continuation();
  const SocialState empty(market.size());
  const bool brute = method == OptimizerMethod::kBruteForce;
  const OptimizerReport plain =
      brute ? brute_force_ranking(base, empty, Objective::kLambda)
            : performance_ranking(base, empty);
  const OptimizerReport cont =
      brute ? brute_force_ranking(market, empty, Objective::kLambdaBar)
            : performance_ranking_with_continuation(market, empty);

  BoundCertificate cert;
  cert.optimal = plain.ranking;
  cert.optimal_continuation = cont.ranking;
  cert.lambda_opt = plain.objective;
  cert.lambda_bar_opt = cont.objective;
  cert.upper_factor = 1.0 / (1.0 - market.max_continuation());
  cert.lower_ok = cert.lambda_bar_opt >= cert.lambda_opt - kBoundSlack;
  cert.upper_ok =
      cert.lambda_bar_opt <= cert.lambda_opt * cert.upper_factor + kBoundSlack;
  return cert;
}

double polynomial_bound_factor(double rho, double r) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw DomainError("rho must lie in [0,1]");
  }
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("r must be finite and >= 0");
  }
  // max over x in [0,1] of x^r (1 - x), attained at x = r / (r + 1).
  const double peak = std::pow(r, r) / std::pow(r + 1.0, r + 1.0);
  const double denom = 1.0 - rho * peak;
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / denom;
}

Ranking continuation_quality_ranking(const Market& market) {
  return quality_ranking(reduce_market(market));
}

double position_bias_gain(const Market& market) {
  const auto& v = market.visibility();
  for (std::size_t p = 1; p < v.size(); ++p) {
    if (v[p] > v[p - 1]) {
      throw DomainError(
          "position bias gain requires non-increasing visibilities");
    }
  }
  const Ranking ranking = continuation_quality_ranking(market);
  const double biased = expected_purchases_with_continuation(market, ranking);
  const Market flat = market.with_visibility(
      std::vector<double>(market.size(), 1.0),
      {.allow_unsorted_visibility = market.allows_unsorted_visibility()});
  const double unbiased = expected_purchases_with_continuation(flat, ranking);
  return biased - unbiased;
}

double si_one_step_gain(const Market& market, const SocialState& state) {
  const std::size_t n = market.size();
  const std::vector<double> a = current_appeal(market, state);
  const Ranking ranking = continuation_quality_ranking(market);
  const auto& q = market.quality();
  const auto& c = market.continuation_probabilities();

  // S = sum v_j a_bar_j, N = sum v_j a_bar_j q_bar_j = sum v_j a_j q_j.
  std::vector<double> v(n);
  double s = 0.0;
  double num = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    v[j] = market.visibility()[ranking.position_of(j)];
    s += v[j] * a[j] * (1.0 - c[j]);
    num += v[j] * a[j] * q[j];
  }
  const double lambda = num / s;

  // A purchase of j raises a_j by one, so a_bar_j by (1 - c_j) and the
  // numerator by v_j q_j.
  double next = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double buy_j = v[j] * a[j] * q[j] / s;
    next += buy_j * (num + v[j] * q[j]) / (s + v[j] * (1.0 - c[j]));
  }
  next += (1.0 - lambda) * lambda;
  return next - lambda;
}

std::vector<ImprovementRow> improvement_table(
    std::span<const ResultPair> pairs) {
  std::vector<ImprovementRow> rows;
  rows.reserve(pairs.size());
  for (const ResultPair& pair : pairs) {
    if (pair.with_continuation == nullptr ||
        pair.without_continuation == nullptr) {
      throw ConfigError("improvement pair is missing a result");
    }
    const SimConfig& with = pair.with_continuation->config;
    const SimConfig& without = pair.without_continuation->config;
    if (!same_products(with.market, without.market)) {
      throw ConfigError("paired results simulate different markets");
    }
    if (with.policy != without.policy) {
      throw ConfigError("paired results use different policies");
    }
    if (with.steps != without.steps ||
        pair.with_continuation->per_replication.size() !=
            pair.without_continuation->per_replication.size()) {
      throw ConfigError("paired results differ in steps or replications");
    }
    if (!without.market.continuation().is_none()) {
      throw ConfigError("baseline result must have no continuation");
    }
    const ContinuationSpec& spec = with.market.continuation();
    ImprovementRow row;
    if (spec.kind() == ContinuationKind::kPolynomial) {
      row.rho = spec.rho();
      row.r = spec.r();
    } else if (spec.kind() != ContinuationKind::kNone) {
      throw ConfigError("improvement rows need polynomial continuation");
    }
    row.policy = with.policy;
    row.efficiency_with = pair.with_continuation->efficiency();
    row.efficiency_without = pair.without_continuation->efficiency();
    if (!(row.efficiency_without > 0.0)) {
      throw DomainError("baseline efficiency is zero; improvement undefined");
    }
    row.improvement_pct = 100.0 *
                          (row.efficiency_with - row.efficiency_without) /
                          row.efficiency_without;
    rows.push_back(row);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ImprovementRow& x, const ImprovementRow& y) {
                     return std::tie(x.rho, x.r, x.policy) <
                            std::tie(y.rho, y.r, y.policy);
                   });
  return rows;
}

std::string format_improvement_table(std::span<const ImprovementRow> rows) {
  std::map<std::pair<double, double>, std::map<PolicyKind, double>> grid;
  for (const auto& row : rows) {
    grid[{row.rho, row.r}][row.policy] = row.improvement_pct;
  }
  std::ostringstream out;
  char buf[64];
  out << "parameters        ";
  for (PolicyKind kind : kAllPolicies) {
    std::snprintf(buf, sizeof buf, "%10s", std::string(policy_label(kind)).c_str());
    out << buf;
  }
  out << '\n';
  for (const auto& [key, cells] : grid) {
    std::snprintf(buf, sizeof buf, "rho=%-5g r=%-5g   ", key.first,
                  key.second);
    out << buf;
    for (PolicyKind kind : kAllPolicies) {
      const auto it = cells.find(kind);
      if (it == cells.end()) {
        std::snprintf(buf, sizeof buf, "%10s", "-");
      } else {
        std::snprintf(buf, sizeof buf, "%9.1f%%", it->second);
      }
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<ScatterRow> download_quality_scatter(const SimResult& result,
                                                 const Market& market) {
  if (result.per_replication.empty()) {
    throw DomainError("scatter needs per-replication results");
  }
  const std::vector<std::size_t> order = ascending_quality_order(market);
  std::vector<ScatterRow> rows;
  rows.reserve(order.size() * result.per_replication.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::size_t product = order[rank];
    for (const auto& rep : result.per_replication) {
      if (rep.downloads.size() != market.size()) {
        throw DomainError("replication size does not match market");
      }
      rows.push_back({.product_id = product + 1,
                      .quality = market.quality()[product],
                      .quality_rank = rank + 1,
                      .replication = rep.index,
                      .downloads = rep.downloads[product]});
    }
  }
  return rows;
}

}  // namespace trialoffer
