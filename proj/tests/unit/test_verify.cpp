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


#include <gtest/gtest.h>

#include <algorithm>

#include "trialoffer/verify.hpp"

namespace trialoffer {
namespace {

VerifyOptions quick(std::uint64_t seed) {
  VerifyOptions o;
  o.instances = 25;
  o.seed = seed;
  o.monte_carlo_purchases = 20000;
  return o;
}

TEST(Verify, SmallSuitePasses) {
  VerifyOptions o = quick(1);
  o.monte_carlo_purchases = VerifyOptions{}.monte_carlo_purchases;
  const VerifyReport report = run_verification(o);
  EXPECT_TRUE(report.passed()) << report.format();
  EXPECT_EQ(report.checks.size(), 14u);
  for (const auto& c : report.checks) EXPECT_GT(c.cases, 0) << c.name;
}

TEST(Verify, SingleInstanceIsDeterministic) {
  VerifyOptions o = quick(42);
  o.instances = 1;
  const VerifyReport a = run_verification(o);
  const VerifyReport b = run_verification(o);
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.format(), b.format());
}

TEST(Verify, CatchesAReductionThatForgetsTheQualityRescale) {
  VerifyOptions o = quick(1);
  o.reducer = [](const Market& m) {
    const auto c = m.continuation_probabilities();
    std::vector<double> a = m.appeal();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= 1.0 - c[i];
    return Market::reduced(m.quality(), a, m.visibility());
  };
  const VerifyReport report = run_verification(o);
  EXPECT_FALSE(report.passed());
  const std::string text = report.format();
  EXPECT_NE(text.find("FAIL  reduction identity"), std::string::npos) << text;
}

TEST(Verify, FormatHasOneLinePerCheck) {
  const VerifyReport report = run_verification(quick(3));
  const std::string text = report.format();
  EXPECT_EQ(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')),
            report.checks.size());
}

}  // namespace
}  // namespace trialoffer
