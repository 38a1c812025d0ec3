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


#include <benchmark/benchmark.h>

#include "trialoffer/generators.hpp"
#include "trialoffer/policies.hpp"
#include "trialoffer/simulation.hpp"

namespace trialoffer {
namespace {

Market gaussian_market(std::size_t n, double rho, double r) {
  const ProductDraw d = generate_gaussian_instance({.n = n, .seed = 1});
  return Market(d.quality, d.appeal,
                visibility_profile(VisibilityProfile::kHarmonic, n),
                ContinuationSpec::polynomial(rho, r));
}

void BM_TryProbabilities(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Market m = gaussian_market(n, 0.5, 1.0);
  const Ranking r = quality_ranking(m);
  const SocialState s(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(try_probabilities(m, r, s));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TryProbabilities)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_PerformanceRanking(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Market m = gaussian_market(n, 0.9, 1.0);
  const SocialState s(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(performance_ranking_with_continuation(m, s));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PerformanceRanking)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void BM_BruteForce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Market m = gaussian_market(n, 0.9, 1.0);
  const SocialState s(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_ranking(m, s, Objective::kLambdaBar));
  }
}
BENCHMARK(BM_BruteForce)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

// One replication of the 50-product market at 20000 participants.
void BM_Replication(benchmark::State& state) {
  SimConfig cfg{.market = gaussian_market(50, 0.9, 1.0)};
  cfg.policy = static_cast<PolicyKind>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_simulation(cfg, 0));
  }
  state.SetLabel(std::string(policy_label(cfg.policy)));
}
BENCHMARK(BM_Replication)
    ->DenseRange(0, 3)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace trialoffer

BENCHMARK_MAIN();
