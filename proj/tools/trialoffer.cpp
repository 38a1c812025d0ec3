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


#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "trialoffer/analysis.hpp"
#include "trialoffer/csv.hpp"
#include "trialoffer/errors.hpp"
#include "trialoffer/experiment.hpp"
#include "trialoffer/io.hpp"
#include "trialoffer/market.hpp"
#include "trialoffer/policies.hpp"
#include "trialoffer/verify.hpp"

namespace fs = std::filesystem;
using namespace trialoffer;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kIo = 3 };

fs::path sibling(const fs::path& input, const std::string& suffix) {
  fs::path out = input;
  out.replace_filename(input.stem().string() + suffix);
  return out;
}

std::string list_text(const Ranking& ranking) {
  std::string s = "[";
  for (std::size_t p = 0; p < ranking.size(); ++p) {
    if (p) s += ",";
    s += std::to_string(ranking.product_at(p) + 1);
  }
  return s + "]";
}

int cmd_reduce(const fs::path& input, fs::path output) {
  const Market m = load_market(input);
  const Market reduced = reduce_market(m);
  const auto c = m.continuation_probabilities();

  std::printf("%-8s %15s %15s %15s %15s\n", "product", "q", "c", "q_bar",
              "a_bar");
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::printf("%-8zu %15.12f %15.12f %15.12f %15.12f\n", i + 1,
                m.quality()[i], c[i], reduced.quality()[i],
                reduced.appeal()[i]);
  }
  if (output.empty()) output = sibling(input, ".reduced.json");
  save_market(reduced, output);
  std::printf("wrote %s\n", output.string().c_str());
  return kOk;
}

int cmd_optimize(const fs::path& input, const std::string& objective_name,
                 const std::string& method_name, fs::path output) {
  const Market m = load_market(input);
  const Objective objective = objective_name == "lambda"
                                  ? Objective::kLambda
                                  : Objective::kLambdaBar;
  const Market target =
      objective == Objective::kLambda ? m.without_continuation() : m;
  const SocialState none(m.size());

  OptimizerReport report;
  if (method_name == "brute") {
    report = brute_force_ranking(target, none, objective);
  } else if (objective == Objective::kLambda) {
    report = performance_ranking(target, none);
  } else {
    report = performance_ranking_with_continuation(target, none);
  }

  std::printf("list        %s\n", list_text(report.ranking).c_str());
  std::printf("objective   %s = %s\n", objective_name.c_str(),
              format_real(report.objective).c_str());
  std::printf("iterations  %lld\n", static_cast<long long>(report.iterations));
  std::printf("method      %s\n", method_name.c_str());

  nlohmann::ordered_json j;
  j["objective"] = objective_name;
  j["method"] = method_name;
  j["value"] = report.objective;
  j["iterations"] = report.iterations;
  auto list = nlohmann::json::array();
  for (std::size_t p = 0; p < report.ranking.size(); ++p) {
    list.push_back(report.ranking.product_at(p) + 1);
  }
  j["list"] = list;
  if (output.empty()) output = sibling(input, ".ranking.json");
  write_text_file(output, j.dump(2) + "\n");
  std::printf("wrote %s\n", output.string().c_str());
  return kOk;
}

int cmd_simulate(const fs::path& spec_path, const fs::path& output_dir,
                 unsigned threads) {
  const ExperimentSpec spec = load_experiment_spec(spec_path);
  const fs::path root = resolve_output_dir(spec, output_dir);
  RunOptions options;
  options.threads = threads;
  options.progress = &std::cerr;
  const ExperimentOutcome outcome = run_experiment(spec, root, options);

  std::cout << "efficiency (mean total downloads per replication)\n"
            << format_efficiency_table(outcome);
  if (!outcome.improvements.empty()) {
    std::cout << "\nimprovement from continuation\n"
              << format_improvement_table(outcome.improvements);
  }
  std::cout << "\nresults in " << outcome.root.string() << "\n";
  return kOk;
}

int cmd_verify(std::int64_t instances, std::uint64_t seed,
               std::int64_t purchases) {
  VerifyOptions options;
  options.instances = instances;
  options.seed = seed;
  options.monte_carlo_purchases = purchases;
  const VerifyReport report = run_verification(options);
  std::cout << report.format();
  const bool ok = report.passed();
  std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
  return ok ? kOk : kVerifyFailed;
}

int cmd_plot_data(const fs::path& store, fs::path out) {
  if (out.empty()) out = store / "plots";
  const PlotDataSummary summary = write_plot_data(store, out);
  std::printf("wrote %zu cells, %zu scatter rows to %s\n", summary.cells,
              summary.scatter_rows, out.string().c_str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trial-offer markets with continuation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TRIALOFFER_VERSION_STRING);

  fs::path reduce_in, reduce_out;
  auto* reduce = app.add_subcommand(
      "reduce", "Reduce a market with continuation to one without");
  reduce->add_option("market", reduce_in, "Market file")->required();
  reduce->add_option("-o,--output", reduce_out,
                     "Reduced market file (default <market>.reduced.json)");

  fs::path opt_in, opt_out;
  std::string objective = "lambda-bar", method = "parametric";
  auto* optimize =
      app.add_subcommand("optimize", "Compute the performance ranking");
  optimize->add_option("market", opt_in, "Market file")->required();
  optimize->add_option("--objective", objective, "lambda or lambda-bar")
      ->check(CLI::IsMember({"lambda", "lambda-bar"}))
      ->capture_default_str();
  optimize->add_option("--method", method, "parametric or brute")
      ->check(CLI::IsMember({"parametric", "brute"}))
      ->capture_default_str();
  optimize->add_option("-o,--output", opt_out,
                       "Result file (default <market>.ranking.json)");

  fs::path sim_spec, sim_out;
  unsigned threads = 0;
  auto* simulate =
      app.add_subcommand("simulate", "Run an experiment grid");
  simulate->add_option("spec", sim_spec, "Experiment spec file")->required();
  simulate->add_option("--output-dir", sim_out,
                       std::string("Result store (default: spec, then $") +
                           kOutputDirEnv + ", then ./results)");
  simulate->add_option("--threads", threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  std::int64_t instances = 500, purchases = 100000;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("--instances", instances, "Random instances per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", seed, "Base seed")->capture_default_str();
  verify->add_option("--purchases", purchases,
                     "Purchases for the Monte Carlo check (0 skips it)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  fs::path plot_store, plot_out;
  auto* plot = app.add_subcommand("plot-data",
                                  "Emit scatter and trajectory CSVs");
  plot->add_option("store", plot_store, "Result store")->required();
  plot->add_option("-o,--output", plot_out, "Output directory (default <store>/plots)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  try {
    if (*reduce) return cmd_reduce(reduce_in, reduce_out);
    if (*optimize) return cmd_optimize(opt_in, objective, method, opt_out);
    if (*simulate) return cmd_simulate(sim_spec, sim_out, threads);
    if (*verify) return cmd_verify(instances, seed, purchases);
    if (*plot) return cmd_plot_data(plot_store, plot_out);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
