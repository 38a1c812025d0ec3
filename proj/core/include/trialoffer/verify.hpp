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

#ifndef TRIALOFFER_VERIFY_HPP_
#define TRIALOFFER_VERIFY_HPP_

// Property suite over random instances: every closed form against its
// independent oracle and every structural inequality.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trialoffer/market.hpp"

namespace trialoffer {

struct VerifyOptions {
  std::int64_t instances = 500;
  std::uint64_t seed = 1;
  // Purchases observed by the next-purchase Monte Carlo check.
  std::int64_t monte_carlo_purchases = 100000;
  // Reduction under test; defaults to reduce_market. Replaceable so that a
  // deliberately broken reduction can be shown to be caught.
  std::function<Market(const Market&)> reducer;
};

struct CheckResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  // Largest violation seen (in the check's own units).
  double worst = 0.0;
  std::string first_failure;

  bool passed() const { return failures == 0 && cases > 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  // One "PASS"/"FAIL" line per check.
  std::string format() const;
};

VerifyReport run_verification(const VerifyOptions& options);

}  // namespace trialoffer

#endif  // TRIALOFFER_VERIFY_HPP_
