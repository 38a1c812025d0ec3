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

#ifndef TRIALOFFER_MARKET_HPP_
#define TRIALOFFER_MARKET_HPP_

// Trial-offer markets: products with an appeal and a quality, list positions
// with a visibility, and an optional continuation process that lets a
// participant keep sampling after declining a product. All probabilities are
// computed in closed form from a Market, a Ranking and a SocialState.
//
// Products and positions are 0-based throughout the library. The CLI and
// the file formats print them 1-based.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace trialoffer {

// Continuation probability of the polynomial family, rho * q^r * (1 - q),
// with q^0 = 1 (also at q = 0). Throws DomainError unless q and rho lie in
// [0, 1] and r >= 0.
double continuation_probability(double q, double rho, double r);

enum class ContinuationKind { kNone, kPolynomial, kExplicit };

// How the probability c_i of continuing to shop after sampling product i is
// determined.
class ContinuationSpec {
 public:
  ContinuationSpec() = default;  // kNone

  static ContinuationSpec none() { return {}; }
  // rho in [0, 1], r >= 0.
  static ContinuationSpec polynomial(double rho, double r);
  // One value per product, each in [0, 1).
  static ContinuationSpec explicit_values(std::vector<double> values);

  ContinuationKind kind() const { return kind_; }
  bool is_none() const { return kind_ == ContinuationKind::kNone; }
  double rho() const { return rho_; }
  double r() const { return r_; }
  const std::vector<double>& values() const { return values_; }

  // c_i for product `index` whose quality is `quality`.
  double probability_for(std::size_t index, double quality) const;

  friend bool operator==(const ContinuationSpec&,
                         const ContinuationSpec&) = default;

 private:
  ContinuationKind kind_ = ContinuationKind::kNone;
  double rho_ = 0.0;
  double r_ = 0.0;
  std::vector<double> values_;
};

// A static trial-offer market instance.
//
// Invariants checked at construction (DomainError on violation):
//  * equal, non-zero lengths of quality, appeal and visibility;
//  * quality in [0, 1] (relaxed to >= 0 on reduced markets);
//  * appeal > 0, visibility > 0, all finite;
//  * visibility non-increasing unless `allow_unsorted_visibility`;
//  * every c_i < 1 and q_i + c_i <= 1, so each trial ends in exactly one of
//    purchase / continue / leave.
struct MarketOptions {
  bool allow_unsorted_visibility = false;

  friend bool operator==(const MarketOptions&, const MarketOptions&) = default;
};

class Market {
 public:
  using Options = MarketOptions;

  Market(std::vector<double> quality, std::vector<double> appeal,
         std::vector<double> visibility,
         ContinuationSpec continuation = ContinuationSpec::none(),
         Options options = {});

  // A market tagged as the output of a reduction: no continuation, and
  // qualities only need to be finite and >= 0.
  static Market reduced(std::vector<double> quality,
                        std::vector<double> appeal,
                        std::vector<double> visibility, Options options = {});

  std::size_t size() const { return quality_.size(); }
  const std::vector<double>& quality() const { return quality_; }
  const std::vector<double>& appeal() const { return appeal_; }
  const std::vector<double>& visibility() const { return visibility_; }
  const ContinuationSpec& continuation() const { return continuation_; }
  // c_i per product, resolved from the continuation spec.
  const std::vector<double>& continuation_probabilities() const {
    return continuation_probs_;
  }
  double max_continuation() const;

  // True for the output of reduce_market: qualities are expected purchases
  // per trial there and may exceed 1.
  bool is_reduced() const { return reduced_; }
  bool allows_unsorted_visibility() const {
    return options_.allow_unsorted_visibility;
  }

  // Same products and positions, continuation removed.
  Market without_continuation() const;
  Market with_continuation(ContinuationSpec continuation) const;
  Market with_appeal(std::vector<double> appeal) const;
  Market with_visibility(std::vector<double> visibility,
                         Options options) const;

  friend bool operator==(const Market&, const Market&) = default;

 private:
  struct ReducedTag {};
  Market(ReducedTag, std::vector<double> quality, std::vector<double> appeal,
         std::vector<double> visibility, Options options);

  void validate() const;

  std::vector<double> quality_;
  std::vector<double> appeal_;
  std::vector<double> visibility_;
  ContinuationSpec continuation_;
  std::vector<double> continuation_probs_;
  Options options_;
  bool reduced_ = false;
};

// A bijection between products and list positions. positions()[i] is the
// position of product i; list()[p] is the product shown at position p.
class Ranking {
 public:
  Ranking() = default;

  static Ranking identity(std::size_t n);
  // Throws DomainError unless `positions` is a permutation of 0..n-1.
  static Ranking from_positions(std::vector<std::size_t> positions);
  static Ranking from_list(std::vector<std::size_t> list);

  std::size_t size() const { return positions_.size(); }
  std::size_t position_of(std::size_t product) const {
    return positions_[product];
  }
  std::size_t product_at(std::size_t position) const {
    return list_[position];
  }
  const std::vector<std::size_t>& positions() const { return positions_; }
  const std::vector<std::size_t>& list() const { return list_; }

  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  Ranking(std::vector<std::size_t> positions, std::vector<std::size_t> list)
      : positions_(std::move(positions)), list_(std::move(list)) {}

  std::vector<std::size_t> positions_;
  std::vector<std::size_t> list_;
};

// Purchase counts d_i feeding back into appeal (a_i = A_i + d_i), and the
// number of participants seen so far. Sum of d_i never exceeds step.
class SocialState {
 public:
  SocialState() = default;
  explicit SocialState(std::size_t n) : downloads_(n, 0) {}
  // Throws DomainError on negative counts or a sum exceeding `step`.
  SocialState(std::vector<std::int64_t> downloads, std::int64_t step);

  std::size_t size() const { return downloads_.size(); }
  const std::vector<std::int64_t>& downloads() const { return downloads_; }
  std::int64_t step() const { return step_; }
  std::int64_t total_downloads() const;

  // Ends the current participant's session, optionally with a purchase.
  void advance() { ++step_; }
  void advance_with_purchase(std::size_t product) {
    ++downloads_[product];
    ++step_;
  }

  friend bool operator==(const SocialState&, const SocialState&) = default;

 private:
  std::vector<std::int64_t> downloads_;
  std::int64_t step_ = 0;
};

// a_i = A_i + d_i.
std::vector<double> current_appeal(const Market& market,
                                   const SocialState& state);

// p_i(sigma, d) = v_{sigma_i} a_i / sum_j v_{sigma_j} a_j.
std::vector<double> try_probabilities(const Market& market,
                                      const Ranking& ranking,
                                      const SocialState& state);
std::vector<double> try_probabilities(const Market& market,
                                      const Ranking& ranking);

// lambda(sigma) = sum_i p_i q_i, ignoring any continuation.
double expected_purchases(const Market& market, const Ranking& ranking,
                          const SocialState& state);
double expected_purchases(const Market& market, const Ranking& ranking);

// Closed form of the continuation fixed point:
//   lambda_bar = sum_i p_i q_i / (1 - sum_i p_i c_i).
// Throws DomainError when sum_i p_i c_i >= 1.
double expected_purchases_with_continuation(const Market& market,
                                            const Ranking& ranking,
                                            const SocialState& state);
double expected_purchases_with_continuation(const Market& market,
                                            const Ranking& ranking);

struct FixedPointResult {
  double value = 0.0;
  std::int64_t iterations = 0;
};

inline constexpr std::int64_t kFixedPointIterationCap = 1'000'000;

// Iterates lambda <- sum_i p_i (q_i + c_i lambda) from 0 until two iterates
// differ by less than `tol`. Independent of the closed form above. Throws
// DomainError for tol <= 0, NumericError past kFixedPointIterationCap.
FixedPointResult lambda_fixed_point(const Market& market,
                                    const Ranking& ranking,
                                    const SocialState& state, double tol);

// The equivalent market without continuation: q_bar = q / (1 - c) and
// a_bar = A (1 - c), visibilities unchanged. The result is tagged reduced.
Market reduce_market(const Market& market);

// p_bar_i = p_i / (1 - sum_j p_j c_j): expected number of times product i is
// sampled during one participant's session. Sums to >= 1.
std::vector<double> effective_sample_probabilities(const Market& market,
                                                   const Ranking& ranking,
                                                   const SocialState& state);

// Law of the next purchased product, v_{sigma_i} a_i q_i / sum_j (...).
// Does not depend on the continuation. Throws DomainError if every q_i = 0.
std::vector<double> next_purchase_distribution(const Market& market,
                                               const Ranking& ranking,
                                               const SocialState& state);

}  // namespace trialoffer

#endif  // TRIALOFFER_MARKET_HPP_
