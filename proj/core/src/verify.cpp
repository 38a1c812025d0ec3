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

#include "trialoffer/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "trialoffer/analysis.hpp"
#include "trialoffer/generators.hpp"
#include "trialoffer/policies.hpp"
#include "trialoffer/random.hpp"
#include "trialoffer/simulation.hpp"

namespace trialoffer {

namespace {

constexpr double kIdentityTol = 1e-12;
constexpr double kIterativeTol = 1e-9;

// Stream offsets keep the instance families independent of each other.
enum Family : std::uint64_t {
  kGeneral = 1,
  kSmall = 2,
  kTiny = 3,
  kOpenRho = 4,
  kSocial = 5,
  kMonteCarlo = 6,
};

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  // Records a case whose violation is `excess` (> 0 means failure).
  void record(double excess, std::int64_t instance, const char* what) {
    ++result_.cases;
    if (excess > 0.0 || std::isnan(excess)) {
      if (result_.failures == 0) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "instance %lld: %s (excess %.3g)",
                      static_cast<long long>(instance), what, excess);
        result_.first_failure = buf;
      }
      ++result_.failures;
      if (!(excess <= result_.worst)) result_.worst = excess;
    }
  }

  void expect(bool ok, std::int64_t instance, const char* what) {
    record(ok ? 0.0 : 1.0, instance, what);
  }

  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

RandomStream stream_for(const VerifyOptions& options, Family family,
                        std::int64_t k) {
  return RandomStream::for_replication(
      mix_seed(options.seed ^ (static_cast<std::uint64_t>(family) << 56)),
      static_cast<std::uint64_t>(k));
}

std::string list_string(const Ranking& ranking) {
  std::string s = "[";
  for (std::size_t p = 0; p < ranking.size(); ++p) {
    if (p) s += ",";
    s += std::to_string(ranking.product_at(p) + 1);
  }
  return s + "]";
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed()) return false;
  }
  return !checks.empty();
}

std::string VerifyReport::format() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s  %-44s %6lld cases", c.passed() ? "PASS" : "FAIL",
                  c.name.c_str(), static_cast<long long>(c.cases));
    out << buf;
    if (!c.passed()) {
      out << ", " << c.failures << " failures; first: " << c.first_failure;
    }
    out << '\n';
  }
  return out.str();
}

VerifyReport run_verification(const VerifyOptions& options) {
  const auto reduce =
      options.reducer ? options.reducer
                      : std::function<Market(const Market&)>(reduce_market);
  const std::int64_t k_max = options.instances;

  Check simplex("try probabilities form a distribution");
  Check reduction("reduction identity");
  Check fixed_point("fixed-point oracle");
  Check effective("effective sample consistency");
  Check invariance("next-purchase law ignores continuation");
  Check dominance("polynomial bound factor dominates");
  Check opt_lambda("parametric = brute force (lambda)");
  Check opt_lambda_bar("parametric = brute force (lambda-bar)");
  Check bounds("efficiency bounds");
  Check order("order preservation under reduction");
  Check bias("position bias gain >= 0");
  Check social("social influence one-step gain >= 0");
  Check example("example instance optima");
  Check monte_carlo("next-purchase Monte Carlo (3 s.e.)");

  for (std::int64_t k = 0; k < k_max; ++k) {
    {
      RandomStream s = stream_for(options, kGeneral, k);
      const Market m = random_market(s, {.min_n = 1, .max_n = 20});
      const Ranking rk = random_ranking(m.size(), s);
      const SocialState st = random_social_state(s, m.size(), 20);

      const auto p = try_probabilities(m, rk, st);
      double sum = 0.0;
      bool nonneg = true;
      for (double x : p) {
        sum += x;
        nonneg = nonneg && x >= 0.0;
      }
      simplex.record(nonneg ? std::abs(sum - 1.0) - kIdentityTol : 1.0, k,
                     "probabilities do not sum to one");

      const double closed = expected_purchases_with_continuation(m, rk, st);
      const Market reduced = reduce(m.with_appeal(current_appeal(m, st)));
      reduction.record(
          std::abs(expected_purchases(reduced, rk) - closed) - kIdentityTol, k,
          "lambda(reduced) != lambda_bar(original)");

      const double iterated = lambda_fixed_point(m, rk, st, 1e-13).value;
      fixed_point.record(std::abs(iterated - closed) - kIterativeTol, k,
                         "closed form != fixed-point iteration");

      const auto pbar = effective_sample_probabilities(m, rk, st);
      double lhs = 0.0;
      for (std::size_t i = 0; i < m.size(); ++i) lhs += pbar[i] * m.quality()[i];
      effective.record(std::abs(lhs - closed) - kIdentityTol, k,
                       "sum p_bar q != lambda_bar");

      const auto with = next_purchase_distribution(m, rk, st);
      const auto without =
          next_purchase_distribution(m.without_continuation(), rk, st);
      double diff = 0.0;
      for (std::size_t i = 0; i < with.size(); ++i) {
        diff = std::max(diff, std::abs(with[i] - without[i]));
      }
      invariance.record(diff - kIdentityTol, k,
                        "next-purchase law changes with continuation");

      const auto& spec = m.continuation();
      const double instance_factor = 1.0 / (1.0 - m.max_continuation());
      dominance.record(
          instance_factor - polynomial_bound_factor(spec.rho(), spec.r()) -
              kIdentityTol,
          k, "1/(1-max c) exceeds the polynomial factor");
    }
    {
      RandomStream s = stream_for(options, kSmall, k);
      const Market m = random_market(s, {.min_n = 1, .max_n = 8});
      const SocialState st = random_social_state(s, m.size(), 10);
      const Market base = m.without_continuation();
      const double parametric = performance_ranking(base, st).objective;
      const double brute =
          brute_force_ranking(base, st, Objective::kLambda).objective;
      opt_lambda.record(parametric == brute ? 0.0 : std::abs(brute - parametric),
                        k, "objective differs from exhaustive maximum");
      const double parametric_c =
          performance_ranking_with_continuation(m, st).objective;
      const double brute_c =
          brute_force_ranking(m, st, Objective::kLambdaBar).objective;
      opt_lambda_bar.record(
          parametric_c == brute_c ? 0.0 : std::abs(brute_c - parametric_c), k,
          "objective differs from exhaustive maximum");
    }
    {
      RandomStream s = stream_for(options, kTiny, k);
      const Market m = random_market(s, {.min_n = 1, .max_n = 6});
      const BoundCertificate cert =
          efficiency_bounds(m, OptimizerMethod::kBruteForce);
      bounds.expect(cert.ok(), k, "bound certificate violated");
    }
    {
      RandomStream s = stream_for(options, kOpenRho, k);
      const Market m = random_market(
          s, {.min_n = 1, .max_n = 20, .open_rho_interval = true});
      order.expect(quality_ranking(m) == quality_ranking(reduce(m)), k,
                   "quality ranking changes under reduction");
      bias.record(-position_bias_gain(m) - kIdentityTol, k,
                  "position bias lowers expected purchases");
    }
    {
      RandomStream s = stream_for(options, kSocial, k);
      const Market m = random_market(s, {.min_n = 1, .max_n = 20});
      const SocialState st = random_social_state(s, m.size(), 50);
      social.record(-si_one_step_gain(m, st) - kIdentityTol, k,
                    "expected purchases decrease after one participant");
    }
  }

  const Market plain = example_market();
  const Market cont =
      example_market(ContinuationSpec::polynomial(0.8, 0.7));
  const SocialState none(3);
  example.expect(list_string(performance_ranking(plain).ranking) == "[1,2,3]",
                 0, "parametric optimum without continuation is not [1,2,3]");
  example.expect(
      list_string(brute_force_ranking(plain, none, Objective::kLambda)
                      .ranking) == "[1,2,3]",
      0, "brute-force optimum without continuation is not [1,2,3]");
  example.expect(
      list_string(performance_ranking_with_continuation(cont).ranking) ==
          "[1,3,2]",
      0, "parametric optimum with continuation is not [1,3,2]");
  example.expect(
      list_string(brute_force_ranking(cont, none, Objective::kLambdaBar)
                      .ranking) == "[1,3,2]",
      0, "brute-force optimum with continuation is not [1,3,2]");

  if (options.monte_carlo_purchases > 0) {
    const double purchases = static_cast<double>(options.monte_carlo_purchases);
    std::int64_t variant = 0;
    for (const Market* m : {&plain, &cont}) {
      const Ranking rk = quality_ranking(*m);
      const auto law = next_purchase_distribution(*m, rk, none);
      const auto freq = first_purchase_frequencies(
          *m, rk, none, options.monte_carlo_purchases,
          mix_seed(options.seed ^
                   (static_cast<std::uint64_t>(kMonteCarlo) << 56)) +
              static_cast<std::uint64_t>(variant));
      for (std::size_t i = 0; i < law.size(); ++i) {
        const double se = std::sqrt(law[i] * (1.0 - law[i]) / purchases);
        monte_carlo.record(std::abs(freq[i] - law[i]) - 3.0 * se, variant,
                           "frequency outside 3 standard errors");
      }
      ++variant;
    }
  }

  VerifyReport report;
  for (const Check* c :
       {&simplex, &reduction, &fixed_point, &effective, &invariance,
        &dominance, &opt_lambda, &opt_lambda_bar, &bounds, &order, &bias,
        &social, &example, &monte_carlo}) {
    if (c == &monte_carlo && options.monte_carlo_purchases <= 0) continue;
    report.checks.push_back(c->result());
  }
  return report;
}

}  // namespace trialoffer
