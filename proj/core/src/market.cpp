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

#include "trialoffer/market.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "trialoffer/errors.hpp"

namespace trialoffer {

namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

std::string at(const char* field, std::size_t i) {
  return std::string(field) + "[" + std::to_string(i) + "]";
}

void check_state_size(const Market& market, const SocialState& state) {
  if (state.size() != market.size()) {
    throw DomainError("social state has " + std::to_string(state.size()) +
                      " products, market has " +
                      std::to_string(market.size()));
  }
}

void check_ranking_size(const Market& market, const Ranking& ranking) {
  if (ranking.size() != market.size()) {
    throw DomainError("ranking has " + std::to_string(ranking.size()) +
                      " positions, market has " +
                      std::to_string(market.size()));
  }
}

// Unnormalized trial weights v_{sigma_i} * a_i, summed in product order.
std::vector<double> trial_weights(const Market& market, const Ranking& ranking,
                                  const SocialState& state) {
  check_ranking_size(market, ranking);
  check_state_size(market, state);
  const auto& v = market.visibility();
  const auto& a = market.appeal();
  const auto& d = state.downloads();
  std::vector<double> w(market.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = v[ranking.position_of(i)] * (a[i] + static_cast<double>(d[i]));
  }
  return w;
}

double continuation_mass(const std::vector<double>& p,
                         const std::vector<double>& c) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += p[i] * c[i];
  return s;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

double continuation_probability(double q, double rho, double r) {
  if (!in_unit_interval(q)) {
    throw DomainError("quality must lie in [0,1], got " + std::to_string(q));
  }
  if (!in_unit_interval(rho)) {
    throw DomainError("rho must lie in [0,1], got " + std::to_string(rho));
  }
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("r must be a finite value >= 0, got " +
                      std::to_string(r));
  }
  // std::pow(0, 0) is 1, which is the convention we want.
  return rho * std::pow(q, r) * (1.0 - q);
}

ContinuationSpec ContinuationSpec::polynomial(double rho, double r) {
  if (!in_unit_interval(rho)) {
    throw DomainError("continuation rho must lie in [0,1], got " +
                      std::to_string(rho));
  }
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("continuation r must be finite and >= 0, got " +
                      std::to_string(r));
  }
  ContinuationSpec spec;
  spec.kind_ = ContinuationKind::kPolynomial;
  spec.rho_ = rho;
  spec.r_ = r;
  return spec;
}

ContinuationSpec ContinuationSpec::explicit_values(std::vector<double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0 && values[i] < 1.0)) {
      throw DomainError(at("continuation", i) + " must lie in [0,1), got " +
                        std::to_string(values[i]));
    }
  }
  ContinuationSpec spec;
  spec.kind_ = ContinuationKind::kExplicit;
  spec.values_ = std::move(values);
  return spec;
}

double ContinuationSpec::probability_for(std::size_t index,
                                         double quality) const {
  switch (kind_) {
    case ContinuationKind::kNone:
      return 0.0;
    case ContinuationKind::kPolynomial:
      return continuation_probability(quality, rho_, r_);
    case ContinuationKind::kExplicit:
      return values_.at(index);
  }
  return 0.0;
}

Market::Market(std::vector<double> quality, std::vector<double> appeal,
               std::vector<double> visibility, ContinuationSpec continuation,
               Options options)
    : quality_(std::move(quality)),
      appeal_(std::move(appeal)),
      visibility_(std::move(visibility)),
      continuation_(std::move(continuation)),
      options_(options) {
  if (continuation_.kind() == ContinuationKind::kExplicit &&
      continuation_.values().size() != quality_.size()) {
    throw DomainError("explicit continuation has " +
                      std::to_string(continuation_.values().size()) +
                      " values, market has " +
                      std::to_string(quality_.size()) + " products");
  }
  validate();
  continuation_probs_.resize(quality_.size());
  for (std::size_t i = 0; i < quality_.size(); ++i) {
    const double c = continuation_.probability_for(i, quality_[i]);
    if (!(c < 1.0)) {
      throw DomainError(at("continuation", i) + " evaluates to " +
                        std::to_string(c) + "; must be < 1");
    }
    if (quality_[i] + c > 1.0 + 1e-12) {
      throw DomainError("quality + continuation exceeds 1 for product " +
                        std::to_string(i + 1));
    }
    continuation_probs_[i] = c;
  }
}

Market Market::reduced(std::vector<double> quality,
                       std::vector<double> appeal,
                       std::vector<double> visibility, Options options) {
  return Market(ReducedTag{}, std::move(quality), std::move(appeal),
                std::move(visibility), options);
}

Market::Market(ReducedTag, std::vector<double> quality,
               std::vector<double> appeal, std::vector<double> visibility,
               Options options)
    : quality_(std::move(quality)),
      appeal_(std::move(appeal)),
      visibility_(std::move(visibility)),
      continuation_probs_(quality_.size(), 0.0),
      options_(options),
      reduced_(true) {
  validate();
}

void Market::validate() const {
  const std::size_t n = quality_.size();
  if (n == 0) throw DomainError("market must contain at least one product");
  if (appeal_.size() != n || visibility_.size() != n) {
    throw DomainError("quality, appeal and visibility lengths differ (" +
                      std::to_string(n) + ", " +
                      std::to_string(appeal_.size()) + ", " +
                      std::to_string(visibility_.size()) + ")");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double q = quality_[i];
    const bool ok = reduced_ ? (q >= 0.0 && std::isfinite(q))
                             : in_unit_interval(q);
    if (!ok) {
      throw DomainError(at("quality", i) + " out of range: " +
                        std::to_string(q));
    }
    if (!(appeal_[i] > 0.0) || !std::isfinite(appeal_[i])) {
      throw DomainError(at("appeal", i) + " must be > 0, got " +
                        std::to_string(appeal_[i]));
    }
    if (!(visibility_[i] > 0.0) || !std::isfinite(visibility_[i])) {
      throw DomainError(at("visibility", i) + " must be > 0, got " +
                        std::to_string(visibility_[i]));
    }
    if (!options_.allow_unsorted_visibility && i > 0 &&
        visibility_[i] > visibility_[i - 1]) {
      throw DomainError(
          "visibility must be non-increasing in position (position " +
          std::to_string(i + 1) + ")");
    }
  }
}

double Market::max_continuation() const {
  return *std::max_element(continuation_probs_.begin(),
                           continuation_probs_.end());
}

Market Market::without_continuation() const {
  if (reduced_) return *this;
  return Market(quality_, appeal_, visibility_, ContinuationSpec::none(),
                options_);
}

Market Market::with_continuation(ContinuationSpec continuation) const {
  if (reduced_) {
    throw DomainError("cannot attach continuation to a reduced market");
  }
  return Market(quality_, appeal_, visibility_, std::move(continuation),
                options_);
}

Market Market::with_appeal(std::vector<double> appeal) const {
  if (reduced_) {
    return Market(ReducedTag{}, quality_, std::move(appeal), visibility_,
                  options_);
  }
  return Market(quality_, std::move(appeal), visibility_, continuation_,
                options_);
}

Market Market::with_visibility(std::vector<double> visibility,
                               Options options) const {
  if (reduced_) {
    return Market(ReducedTag{}, quality_, appeal_, std::move(visibility),
                  options);
  }
  return Market(quality_, appeal_, std::move(visibility), continuation_,
                options);
}

Ranking Ranking::identity(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return Ranking(ids, ids);
}

Ranking Ranking::from_positions(std::vector<std::size_t> positions) {
  const std::size_t n = positions.size();
  std::vector<std::size_t> list(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t p = positions[i];
    if (p >= n || list[p] != n) {
      throw DomainError("ranking is not a permutation of 1.." +
                        std::to_string(n));
    }
    list[p] = i;
  }
  return Ranking(std::move(positions), std::move(list));
}

Ranking Ranking::from_list(std::vector<std::size_t> list) {
  const std::size_t n = list.size();
  std::vector<std::size_t> positions(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t i = list[p];
    if (i >= n || positions[i] != n) {
      throw DomainError("product list is not a permutation of 1.." +
                        std::to_string(n));
    }
    positions[i] = p;
  }
  return Ranking(std::move(positions), std::move(list));
}

SocialState::SocialState(std::vector<std::int64_t> downloads,
                         std::int64_t step)
    : downloads_(std::move(downloads)), step_(step) {
  for (std::size_t i = 0; i < downloads_.size(); ++i) {
    if (downloads_[i] < 0) {
      throw DomainError(at("downloads", i) + " is negative");
    }
  }
  if (total_downloads() > step_) {
    throw DomainError("more downloads (" + std::to_string(total_downloads()) +
                      ") than participants (" + std::to_string(step_) + ")");
  }
}

std::int64_t SocialState::total_downloads() const {
  return std::accumulate(downloads_.begin(), downloads_.end(),
                         std::int64_t{0});
}

std::vector<double> current_appeal(const Market& market,
                                   const SocialState& state) {
  check_state_size(market, state);
  std::vector<double> a = market.appeal();
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] += static_cast<double>(state.downloads()[i]);
  }
  return a;
}

std::vector<double> try_probabilities(const Market& market,
                                      const Ranking& ranking,
                                      const SocialState& state) {
  std::vector<double> w = trial_weights(market, ranking, state);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return w;
}

std::vector<double> try_probabilities(const Market& market,
                                      const Ranking& ranking) {
  return try_probabilities(market, ranking, SocialState(market.size()));
}

double expected_purchases(const Market& market, const Ranking& ranking,
                          const SocialState& state) {
  return dot(try_probabilities(market, ranking, state), market.quality());
}

double expected_purchases(const Market& market, const Ranking& ranking) {
  return expected_purchases(market, ranking, SocialState(market.size()));
}

double expected_purchases_with_continuation(const Market& market,
                                            const Ranking& ranking,
                                            const SocialState& state) {
  const std::vector<double> p = try_probabilities(market, ranking, state);
  const double stay = continuation_mass(p, market.continuation_probabilities());
  if (!(stay < 1.0)) {
    throw DomainError("continuation mass sum_i p_i c_i = " +
                      std::to_string(stay) + " is not < 1");
  }
  return dot(p, market.quality()) / (1.0 - stay);
}

double expected_purchases_with_continuation(const Market& market,
                                            const Ranking& ranking) {
  return expected_purchases_with_continuation(market, ranking,
                                              SocialState(market.size()));
}

FixedPointResult lambda_fixed_point(const Market& market,
                                    const Ranking& ranking,
                                    const SocialState& state, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be > 0");
  const std::vector<double> p = try_probabilities(market, ranking, state);
  const auto& q = market.quality();
  const auto& c = market.continuation_probabilities();
  FixedPointResult result;
  double lambda = 0.0;
  while (result.iterations < kFixedPointIterationCap) {
    double next = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      next += p[i] * (q[i] + c[i] * lambda);
    }
    ++result.iterations;
    const double delta = std::abs(next - lambda);
    lambda = next;
    if (delta < tol) {
      result.value = lambda;
      return result;
    }
  }
  throw NumericError("continuation fixed point did not converge within " +
                     std::to_string(kFixedPointIterationCap) + " iterations");
}

Market reduce_market(const Market& market) {
  if (market.is_reduced()) return market;
  const std::size_t n = market.size();
  const auto& c = market.continuation_probabilities();
  std::vector<double> quality(n);
  std::vector<double> appeal(n);
  for (std::size_t i = 0; i < n; ++i) {
    quality[i] = market.quality()[i] / (1.0 - c[i]);
    appeal[i] = market.appeal()[i] * (1.0 - c[i]);
  }
  return Market::reduced(
      std::move(quality), std::move(appeal), market.visibility(),
      {.allow_unsorted_visibility = market.allows_unsorted_visibility()});
}

std::vector<double> effective_sample_probabilities(const Market& market,
                                                   const Ranking& ranking,
                                                   const SocialState& state) {
  std::vector<double> p = try_probabilities(market, ranking, state);
  const double stay = continuation_mass(p, market.continuation_probabilities());
  if (!(stay < 1.0)) {
    throw DomainError("continuation mass sum_i p_i c_i = " +
                      std::to_string(stay) + " is not < 1");
  }
  for (double& x : p) x /= (1.0 - stay);
  return p;
}

std::vector<double> next_purchase_distribution(const Market& market,
                                               const Ranking& ranking,
                                               const SocialState& state) {
  std::vector<double> w = trial_weights(market, ranking, state);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] *= market.quality()[i];
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(total > 0.0)) {
    throw DomainError("every quality is zero; no purchase can occur");
  }
  for (double& x : w) x /= total;
  return w;
}

}  // namespace trialoffer
