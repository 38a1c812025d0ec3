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

#include "trialoffer/generators.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "trialoffer/errors.hpp"

namespace trialoffer {

namespace {

void min_max_normalize(std::vector<double>& x, double lo, double hi) {
  const auto [min_it, max_it] = std::minmax_element(x.begin(), x.end());
  const double min = *min_it;
  const double span = *max_it - min;
  for (double& v : x) {
    // A constant draw (including n = 1) maps to the top of the range.
    v = span > 0.0 ? lo + (v - min) / span * (hi - lo) : hi;
  }
}

}  // namespace

void GaussianInstanceSpec::validate() const {
  if (n < 1) throw ConfigError("instance.n must be >= 1");
  if (!(sd_quality >= 0.0)) throw ConfigError("instance.sd_quality must be >= 0");
  if (!(sd_appeal >= 0.0)) throw ConfigError("instance.sd_appeal must be >= 0");
  if (!(quality_min > 0.0 && quality_min <= quality_max &&
        quality_max <= 1.0)) {
    throw ConfigError(
        "instance.quality_range must satisfy 0 < min <= max <= 1");
  }
  if (!(appeal_min > 0.0 && appeal_min <= appeal_max)) {
    throw ConfigError("instance.appeal_range must satisfy 0 < min <= max");
  }
}

ProductDraw generate_gaussian_instance(const GaussianInstanceSpec& spec) {
  spec.validate();
  RandomStream stream(spec.seed);
  ProductDraw draw;
  draw.quality.resize(spec.n);
  draw.appeal.resize(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    draw.quality[i] = stream.normal(spec.mean_quality, spec.sd_quality);
    draw.appeal[i] = stream.normal(spec.mean_appeal, spec.sd_appeal);
  }
  min_max_normalize(draw.quality, spec.quality_min, spec.quality_max);
  min_max_normalize(draw.appeal, spec.appeal_min, spec.appeal_max);
  return draw;
}

std::string_view visibility_profile_name(VisibilityProfile profile) {
  switch (profile) {
    case VisibilityProfile::kHarmonic: return "harmonic";
    case VisibilityProfile::kUniform: return "uniform";
  }
  return "unknown";
}

std::optional<VisibilityProfile> parse_visibility_profile(std::string_view s) {
  if (s == "harmonic") return VisibilityProfile::kHarmonic;
  if (s == "uniform") return VisibilityProfile::kUniform;
  return std::nullopt;
}

std::vector<double> visibility_profile(VisibilityProfile profile,
                                       std::size_t n) {
  std::vector<double> v(n, 1.0);
  if (profile == VisibilityProfile::kHarmonic) {
    for (std::size_t p = 0; p < n; ++p) v[p] = 1.0 / static_cast<double>(p + 1);
  }
  return v;
}

Market random_market(RandomStream& stream, const RandomMarketOptions& options) {
  if (options.min_n < 1 || options.max_n < options.min_n) {
    throw DomainError("random_market: need 1 <= min_n <= max_n");
  }
  const std::size_t n =
      options.min_n + stream.uniform_index(options.max_n - options.min_n + 1);
  std::vector<double> q(n), a(n), v(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = 1.0 - stream.uniform();
    a[i] = stream.uniform(0.05, 5.0);
    v[i] = stream.uniform(0.05, 1.0);
  }
  std::sort(v.begin(), v.end(), std::greater<>());

  ContinuationSpec spec;
  switch (options.continuation) {
    case ContinuationKind::kNone:
      break;
    case ContinuationKind::kPolynomial: {
      double rho = stream.uniform(options.rho_min, options.rho_max);
      while (options.open_rho_interval &&
             (rho <= options.rho_min || rho >= options.rho_max)) {
        rho = stream.uniform(options.rho_min, options.rho_max);
      }
      const double r = stream.uniform(0.0, options.r_max);
      spec = ContinuationSpec::polynomial(rho, r);
      // rho = 1, r = 0 puts c at 1 for q = 0; qualities are > 0 here.
      break;
    }
    case ContinuationKind::kExplicit: {
      std::vector<double> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = stream.uniform() * (1.0 - q[i]);
      spec = ContinuationSpec::explicit_values(std::move(c));
      break;
    }
  }
  return Market(std::move(q), std::move(a), std::move(v), std::move(spec));
}

SocialState random_social_state(RandomStream& stream, std::size_t n,
                                std::int64_t max_downloads) {
  std::vector<std::int64_t> d(n);
  std::int64_t total = 0;
  for (auto& x : d) {
    x = static_cast<std::int64_t>(
        stream.uniform_index(static_cast<std::size_t>(max_downloads) + 1));
    total += x;
  }
  return SocialState(std::move(d), total);
}

Market example_market(ContinuationSpec continuation) {
  return Market({0.9, 0.2, 0.6}, {0.9, 0.1, 0.3}, {0.8, 0.5, 0.1},
                std::move(continuation));
}

}  // namespace trialoffer
