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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion holds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "trialoffer/analysis.hpp"
#include "trialoffer/csv.hpp"
#include "trialoffer/experiment.hpp"
#include "trialoffer/generators.hpp"
#include "trialoffer/policies.hpp"
#include "trialoffer/simulation.hpp"

namespace fs = std::filesystem;
using namespace trialoffer;

namespace {

constexpr std::uint64_t kSeed = 2026;
constexpr int kInstances = 500;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
  double time_limit_s;  // 0: none
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string list_text(const Ranking& r) {
  std::string s = "[";
  for (std::size_t p = 0; p < r.size(); ++p) {
    if (p) s += ",";
    s += std::to_string(r.product_at(p) + 1);
  }
  return s + "]";
}

RandomStream stream(std::uint64_t family, int k) {
  return RandomStream::for_replication(kSeed * 131 + family,
                                       static_cast<std::uint64_t>(k));
}

Outcome reduction_identity() {
  double worst = 0.0;
  for (int k = 0; k < kInstances; ++k) {
    RandomStream s = stream(1, k);
    const Market m = random_market(s, {.min_n = 1, .max_n = 20, .r_max = 3.0});
    const Ranking r = random_ranking(m.size(), s);
    worst = std::max(worst, std::abs(expected_purchases(reduce_market(m), r) -
                                     expected_purchases_with_continuation(m, r)));
  }
  return {worst <= 1e-12, "max |lambda(reduced) - lambda_bar| = " + fmt("%.3g", worst)};
}

Outcome fixed_point() {
  double worst = 0.0;
  for (int k = 0; k < kInstances; ++k) {
    RandomStream s = stream(1, k);
    const Market m = random_market(s, {.min_n = 1, .max_n = 20, .r_max = 3.0});
    const Ranking r = random_ranking(m.size(), s);
    const SocialState none(m.size());
    worst = std::max(worst,
                     std::abs(lambda_fixed_point(m, r, none, 1e-13).value -
                              expected_purchases_with_continuation(m, r)));
  }
  return {worst <= 1e-9, "max |closed form - iteration| = " + fmt("%.3g", worst)};
}

Outcome example_parity() {
  const Market plain = example_market();
  const Market cont = example_market(ContinuationSpec::polynomial(0.8, 0.7));
  const SocialState none(3);
  const std::string a = list_text(performance_ranking(plain).ranking);
  const std::string b =
      list_text(brute_force_ranking(plain, none, Objective::kLambda).ranking);
  const std::string c =
      list_text(performance_ranking_with_continuation(cont).ranking);
  const std::string d =
      list_text(brute_force_ranking(cont, none, Objective::kLambdaBar).ranking);
  const bool ok = a == "[1,2,3]" && b == a && c == "[1,3,2]" && d == c;
  return {ok, "lambda: " + a + " / " + b + ", lambda-bar: " + c + " / " + d};
}

Outcome optimizer_exactness() {
  int mismatches = 0;
  for (int k = 0; k < 200; ++k) {
    RandomStream s = stream(4, k);
    const Market m = random_market(s, {.min_n = 1, .max_n = 8});
    const SocialState st = random_social_state(s, m.size(), 10);
    const Market base = m.without_continuation();
    mismatches += performance_ranking(base, st).objective !=
                  brute_force_ranking(base, st, Objective::kLambda).objective;
    mismatches += performance_ranking_with_continuation(m, st).objective !=
                  brute_force_ranking(m, st, Objective::kLambdaBar).objective;
  }
  return {mismatches == 0,
          std::to_string(mismatches) + " of 400 objective comparisons differ"};
}

Outcome bounds() {
  int failed = 0;
  for (int k = 0; k < kInstances; ++k) {
    RandomStream s = stream(5, k);
    const Market m = random_market(s, {.min_n = 1, .max_n = 6});
    failed += !efficiency_bounds(m, OptimizerMethod::kBruteForce).ok();
  }
  const double factor = polynomial_bound_factor(1.0, 1.0);
  return {failed == 0 && factor == 4.0 / 3.0,
          std::to_string(failed) + " certificates failed; factor(1,1) = " +
              fmt("%.17g", factor)};
}

Outcome order_preservation() {
  int failed = 0;
  for (int k = 0; k < kInstances; ++k) {
    RandomStream s = stream(6, k);
    const Market m = random_market(
        s, {.min_n = 1, .max_n = 20, .open_rho_interval = true});
    failed += !(quality_ranking(m) == quality_ranking(reduce_market(m)));
  }
  return {failed == 0, std::to_string(failed) + " permutations changed"};
}

Outcome next_purchase() {
  const std::int64_t purchases = 100000;
  const Market off = example_market();
  const Market on = example_market(ContinuationSpec::polynomial(0.8, 0.7));
  const Ranking r = quality_ranking(off);
  const SocialState none(3);
  const auto law = next_purchase_distribution(off, r, none);
  const auto f_off = first_purchase_frequencies(off, r, none, purchases, kSeed);
  const auto f_on = first_purchase_frequencies(on, r, none, purchases, kSeed + 1);
  double worst = 0.0;  // in standard errors
  for (std::size_t i = 0; i < 3; ++i) {
    const double se = std::sqrt(law[i] * (1 - law[i]) / purchases);
    worst = std::max({worst, std::abs(f_off[i] - law[i]) / se,
                      std::abs(f_on[i] - law[i]) / se,
                      std::abs(f_on[i] - f_off[i]) / (se * std::sqrt(2.0))});
  }
  return {worst <= 3.0, "largest deviation " + fmt("%.2f", worst) + " s.e."};
}

Outcome monotonicity() {
  double worst_bias = 0.0, worst_si = 0.0;
  for (int k = 0; k < kInstances; ++k) {
    RandomStream s = stream(8, k);
    const Market m = random_market(s, {.min_n = 1, .max_n = 20});
    const SocialState st = random_social_state(s, m.size(), 50);
    worst_bias = std::min(worst_bias, position_bias_gain(m));
    worst_si = std::min(worst_si, si_one_step_gain(m, st));
  }
  return {worst_bias >= -1e-12 && worst_si >= -1e-12,
          "min position-bias gain " + fmt("%.3g", worst_bias) +
              ", min SI gain " + fmt("%.3g", worst_si)};
}

// Shared by criteria 9 and 11.
const ExperimentOutcome& desk_scale() {
  static const ExperimentOutcome outcome = [] {
    const ExperimentSpec spec =
        load_experiment_spec(TRIALOFFER_TEST_DATA "/desk_scale.json");
    return run_experiment(spec, "acceptance_desk_scale");
  }();
  return outcome;
}

double efficiency(PolicyKind p, std::optional<ContinuationCell> cell) {
  return desk_scale().find(p, cell)->result.efficiency();
}

double improvement(PolicyKind p, ContinuationCell cell) {
  for (const auto& row : desk_scale().improvements) {
    if (row.policy == p && row.rho == cell.rho && row.r == cell.r) {
      return row.improvement_pct;
    }
  }
  return std::nan("");
}

Outcome grid_trends() {
  using P = PolicyKind;
  const ContinuationCell hi0{0.9, 0.0}, hi2{0.9, 2.0};
  const double r0 = improvement(P::kRandom, hi0), d0 = improvement(P::kPopularity, hi0),
               p0 = improvement(P::kPerformance, hi0);
  const bool a = r0 > d0 && d0 > p0;
  const double r2 = improvement(P::kRandom, hi2), p2 = improvement(P::kPerformance, hi2);
  const bool b = r2 < p2;
  std::string bad_cells;
  std::vector<std::optional<ContinuationCell>> cells{std::nullopt};
  for (const auto& c : desk_scale().cells) {
    if (c.policy == P::kPerformance && c.continuation) cells.push_back(c.continuation);
  }
  for (const auto& cell : cells) {
    const double pe = efficiency(P::kPerformance, cell),
                 de = efficiency(P::kPopularity, cell),
                 re = efficiency(P::kRandom, cell);
    if (!(pe >= de && de >= re)) {
      bad_cells += " " + cell_name(cell) + "(P " + fmt("%.1f", pe) + ", D " +
                   fmt("%.1f", de) + ", R " + fmt("%.1f", re) + ")";
    }
  }
  const bool c = bad_cells.empty();
  std::string detail = std::string("(a) ") + (a ? "ok" : "FAIL") + " R " +
                       fmt("%.1f%%", r0) + " D " + fmt("%.1f%%", d0) + " P " +
                       fmt("%.1f%%", p0) + "; (b) " + (b ? "ok" : "FAIL") +
                       " R " + fmt("%.1f%%", r2) + " P " + fmt("%.1f%%", p2) +
                       "; (c) " + (c ? "ok" : "FAIL in" + bad_cells);
  return {a && b && c, detail};
}

std::map<std::string, std::string> csv_bodies(const fs::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(root)) {
    if (e.path().extension() == ".csv") {
      out[fs::relative(e.path(), root).string()] = read_text_file(e.path());
    }
  }
  return out;
}

Outcome determinism() {
  const std::string spec = TRIALOFFER_TEST_DATA "/determinism.json";
  const fs::path a = "acceptance_determinism_a", b = "acceptance_determinism_b";
  fs::remove_all(a);
  fs::remove_all(b);
#ifdef TRIALOFFER_CLI
  for (const fs::path& dir : {a, b}) {
    const std::string cmd = std::string("\"") + TRIALOFFER_CLI + "\" simulate \"" +
                            spec + "\" --output-dir \"" + dir.string() +
                            "\" > /dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) return {false, "simulate exited non-zero"};
  }
#else
  const ExperimentSpec parsed = load_experiment_spec(spec);
  run_experiment(parsed, a);
  run_experiment(parsed, b);
#endif
  const auto fa = csv_bodies(a), fb = csv_bodies(b);
  return {!fa.empty() && fa == fb,
          std::to_string(fa.size()) + " CSV files compared"};
}

Outcome distribution_trends() {
  const ContinuationCell cell{0.9, 1.0};
  const auto q = desk_scale().find(PolicyKind::kQuality, cell);
  const auto d = desk_scale().find(PolicyKind::kPopularity, cell);
  const auto rows_q = download_quality_scatter(q->result, q->result.config.market);
  const auto rows_d = download_quality_scatter(d->result, d->result.config.market);
  const std::size_t n = q->result.config.market.size();
  const auto w = static_cast<double>(q->result.config.replications);

  // Rows are grouped by ascending quality, W rows per product.
  auto mean_of = [&](const std::vector<ScatterRow>& rows, std::size_t rank) {
    double s = 0.0;
    for (const auto& row : rows) {
      if (row.quality_rank == rank) s += static_cast<double>(row.downloads);
    }
    return s / w;
  };
  auto variance_of = [&](const std::vector<ScatterRow>& rows, std::size_t rank) {
    const double mu = mean_of(rows, rank);
    double s = 0.0;
    for (const auto& row : rows) {
      if (row.quality_rank == rank) {
        s += (static_cast<double>(row.downloads) - mu) *
             (static_cast<double>(row.downloads) - mu);
      }
    }
    return s / (w - 1.0);
  };

  std::string means;
  bool monotone = true;
  double prev = -1.0;
  for (std::size_t rank = n - 4; rank <= n; ++rank) {
    const double m = mean_of(rows_q, rank);
    means += (means.empty() ? "" : ", ") + fmt("%.1f", m);
    if (m < prev) monotone = false;
    prev = m;
  }
  const double var_d = variance_of(rows_d, n), var_q = variance_of(rows_q, n);
  const bool spread = var_d > var_q;
  return {monotone && spread,
          std::string("Q-rank top-5 means ") + means + (monotone ? " ok" : " FAIL") +
              "; top-product variance D " + fmt("%.4g", var_d) + " vs Q " +
              fmt("%.4g", var_q) + (spread ? " ok" : " FAIL")};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "reduction identity", reduction_identity, 1.0},
      {2, "fixed-point oracle", fixed_point, 0},
      {3, "example instance optima", example_parity, 0},
      {4, "optimizer exactness", optimizer_exactness, 30.0},
      {5, "efficiency bounds", bounds, 0},
      {6, "order preservation", order_preservation, 0},
      {7, "next-purchase law", next_purchase, 0},
      {8, "position bias and SI monotonicity", monotonicity, 0},
      {9, "desk-scale improvement and efficiency trends", grid_trends, 600.0},
      {10, "byte-identical reruns", determinism, 0},
      {11, "download distribution versus quality", distribution_trends, 0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit_s > 0 && secs > c.time_limit_s) {
      out.pass = false;
      out.detail += "; exceeded " + fmt("%.0f s", c.time_limit_s);
    }
    failures += !out.pass;
    std::printf("%s  %2d  %-45s %8.2f s  %s\n", out.pass ? "PASS" : "FAIL", c.id,
                c.title, secs, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
