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

#ifndef TRIALOFFER_GENERATORS_HPP_
#define TRIALOFFER_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "trialoffer/market.hpp"
#include "trialoffer/random.hpp"

namespace trialoffer {

// Qualities and appeals drawn independently from normal distributions and
// min-max normalized into [quality_min, quality_max] and
// [appeal_min, appeal_max].
struct GaussianInstanceSpec {
  std::size_t n = 50;
  double mean_quality = 0.5;
  double sd_quality = 0.2;
  double mean_appeal = 0.5;
  double sd_appeal = 0.2;
  double quality_min = 0.01;
  double quality_max = 1.0;
  double appeal_min = 0.01;
  double appeal_max = 10.0;
  std::uint64_t seed = 1;

  // Throws ConfigError naming the offending field.
  void validate() const;
};

struct ProductDraw {
  std::vector<double> quality;
  std::vector<double> appeal;
};

ProductDraw generate_gaussian_instance(const GaussianInstanceSpec& spec);

enum class VisibilityProfile {
  kHarmonic,  // v_p = 1 / p
  kUniform,   // v_p = 1
};

std::string_view visibility_profile_name(VisibilityProfile profile);
std::optional<VisibilityProfile> parse_visibility_profile(std::string_view s);
std::vector<double> visibility_profile(VisibilityProfile profile,
                                       std::size_t n);

// Random instances for property sweeps.
struct RandomMarketOptions {
  std::size_t min_n = 1;
  std::size_t max_n = 20;
  double rho_min = 0.0;
  double rho_max = 1.0;
  double r_max = 3.0;
  // Polynomial or none; kExplicit draws c_i uniformly in [0, 1 - q_i).
  ContinuationKind continuation = ContinuationKind::kPolynomial;
  // Exclude the endpoints of [rho_min, rho_max].
  bool open_rho_interval = false;
};

// Qualities uniform in (0, 1], appeals uniform in [0.05, 5), visibilities
// uniform in [0.05, 1) sorted non-increasing.
Market random_market(RandomStream& stream, const RandomMarketOptions& options);

// Downloads uniform in [0, max_downloads] per product; step = total.
SocialState random_social_state(RandomStream& stream, std::size_t n,
                                std::int64_t max_downloads);

// The three-product instance with v = (0.8, 0.5, 0.1), q = (0.9, 0.2, 0.6),
// a = (0.9, 0.1, 0.3) whose optimal list changes from [1,2,3] to [1,3,2]
// under polynomial continuation with rho = 0.8, r = 0.7.
Market example_market(ContinuationSpec continuation = ContinuationSpec::none());

}  // namespace trialoffer

#endif  // TRIALOFFER_GENERATORS_HPP_
