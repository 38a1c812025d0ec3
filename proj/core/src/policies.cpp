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

#include "trialoffer/policies.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "trialoffer/errors.hpp"

namespace trialoffer {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& ch : out) {
    ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  return out;
}

// Positions sorted by descending visibility, ties by ascending index. For a
// validated market this is the identity; unsorted visibilities are allowed
// for position-bias experiments.
std::vector<std::size_t> positions_by_visibility(const Market& market) {
  std::vector<std::size_t> order(market.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto& v = market.visibility();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  return order;
}

// Assigns products, given in display order, to positions in visibility order.
Ranking assign(const std::vector<std::size_t>& products_in_order,
               const std::vector<std::size_t>& positions_in_order) {
  std::vector<std::size_t> positions(products_in_order.size());
  for (std::size_t k = 0; k < products_in_order.size(); ++k) {
    positions[products_in_order[k]] = positions_in_order[k];
  }
  return Ranking::from_positions(std::move(positions));
}

// Maximizes sum_i v_{sigma_i} a_i q_i / sum_i v_{sigma_i} a_i over rankings
// of a market without continuation; `appeal` already includes downloads.
Ranking parametric_ascent(const Market& market,
                          const std::vector<double>& appeal,
                          std::int64_t& iterations) {
  const std::size_t n = market.size();
  const auto& q = market.quality();
  const auto slots = positions_by_visibility(market);
  const Market folded = market.with_appeal(appeal);

  Ranking best = assign(
      [&] {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) {
                           return q[a] > q[b];
                         });
        return order;
      }(),
      slots);
  double lambda = expected_purchases(folded, best);
  iterations = 0;

  std::vector<std::size_t> order(n);
  std::vector<double> key(n);
  while (true) {
    ++iterations;
    for (std::size_t i = 0; i < n; ++i) key[i] = appeal[i] * (q[i] - lambda);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return key[a] > key[b];
                     });
    Ranking candidate = assign(order, slots);
    const double value = expected_purchases(folded, candidate);
    if (!(value > lambda)) break;
    lambda = value;
    best = std::move(candidate);
  }
  return best;
}

}  // namespace

std::string_view policy_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kPerformance: return "performance";
    case PolicyKind::kQuality: return "quality";
    case PolicyKind::kPopularity: return "popularity";
    case PolicyKind::kRandom: return "random";
  }
  return "unknown";
}

std::string_view policy_label(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kPerformance: return "P-rank";
    case PolicyKind::kQuality: return "Q-rank";
    case PolicyKind::kPopularity: return "D-rank";
    case PolicyKind::kRandom: return "R-rank";
  }
  return "?";
}

std::optional<PolicyKind> parse_policy(std::string_view text) {
  const std::string key = lower(text);
  for (PolicyKind kind : kAllPolicies) {
    if (key == policy_name(kind) || key == lower(policy_label(kind))) {
      return kind;
    }
  }
  return std::nullopt;
}

Ranking quality_ranking(const Market& market) {
  const auto& q = market.quality();
  std::vector<std::size_t> order(market.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return q[a] > q[b]; });
  return assign(order, positions_by_visibility(market));
}

Ranking popularity_ranking(const Market& market, const SocialState& state) {
  if (state.size() != market.size()) {
    throw DomainError("social state size does not match market");
  }
  const auto& d = state.downloads();
  const auto& a = market.appeal();
  std::vector<std::size_t> order(market.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) {
                     if (d[x] != d[y]) return d[x] > d[y];
                     return a[x] > a[y];
                   });
  return assign(order, positions_by_visibility(market));
}

Ranking random_ranking(std::size_t n, RandomStream& stream) {
  if (n == 0) throw DomainError("random_ranking needs n >= 1");
  std::vector<std::size_t> list(n);
  std::iota(list.begin(), list.end(), std::size_t{0});
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(list[i], list[stream.uniform_index(i + 1)]);
  }
  return Ranking::from_list(std::move(list));
}

OptimizerReport performance_ranking(const Market& market,
                                    const SocialState& state) {
  if (!market.continuation().is_none()) {
    throw DomainError(
        "performance_ranking requires a market without continuation");
  }
  OptimizerReport report;
  report.method = OptimizerMethod::kParametric;
  report.ranking =
      parametric_ascent(market, current_appeal(market, state),
                        report.iterations);
  report.objective = expected_purchases(market, report.ranking, state);
  return report;
}

OptimizerReport performance_ranking(const Market& market) {
  return performance_ranking(market, SocialState(market.size()));
}

OptimizerReport performance_ranking_with_continuation(
    const Market& market, const SocialState& state) {
  const Market reduced =
      reduce_market(market.with_appeal(current_appeal(market, state)));
  OptimizerReport report;
  report.method = OptimizerMethod::kParametric;
  report.ranking =
      parametric_ascent(reduced, reduced.appeal(), report.iterations);
  report.objective =
      expected_purchases_with_continuation(market, report.ranking, state);
  return report;
}

OptimizerReport performance_ranking_with_continuation(const Market& market) {
  return performance_ranking_with_continuation(market,
                                               SocialState(market.size()));
}

OptimizerReport brute_force_ranking(const Market& market,
                                    const SocialState& state,
                                    Objective objective) {
  const std::size_t n = market.size();
  if (n > kBruteForceMaxProducts) {
    throw SizeError("brute force is limited to " +
                    std::to_string(kBruteForceMaxProducts) +
                    " products, market has " + std::to_string(n));
  }
  const auto evaluate = [&](const Ranking& ranking) {
    return objective == Objective::kLambda
               ? expected_purchases(market, ranking, state)
               : expected_purchases_with_continuation(market, ranking, state);
  };

  std::vector<std::size_t> positions(n);
  std::iota(positions.begin(), positions.end(), std::size_t{0});
  OptimizerReport report;
  report.method = OptimizerMethod::kBruteForce;
  report.ranking = Ranking::from_positions(positions);
  report.objective = evaluate(report.ranking);
  report.iterations = 1;
  // next_permutation walks position vectors in lexicographic order, so a
  // strict improvement test keeps the smallest among tied optima.
  while (std::next_permutation(positions.begin(), positions.end())) {
    Ranking candidate = Ranking::from_positions(positions);
    const double value = evaluate(candidate);
    ++report.iterations;
    if (value > report.objective) {
      report.objective = value;
      report.ranking = std::move(candidate);
    }
  }
  return report;
}

Ranking rank_products(PolicyKind policy, const Market& market,
                      const SocialState& state, RandomStream& stream) {
  switch (policy) {
    case PolicyKind::kPerformance:
      return market.continuation().is_none()
                 ? performance_ranking(market, state).ranking
                 : performance_ranking_with_continuation(market, state)
                       .ranking;
    case PolicyKind::kQuality:
      return quality_ranking(market);
    case PolicyKind::kPopularity:
      return popularity_ranking(market, state);
    case PolicyKind::kRandom:
      return random_ranking(market.size(), stream);
  }
  throw DomainError("unknown policy");
}

}  // namespace trialoffer
