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

#ifndef TRIALOFFER_EXPERIMENT_HPP_
#define TRIALOFFER_EXPERIMENT_HPP_

// Experiment sweeps over (continuation, policy) cells and their on-disk
// result store.
//
// Store layout under the output directory:
//
//   manifest.json                 spec snapshot, seeds, version, timestamp
//   efficiency.csv                one row per cell
//   improvement.csv               continuation vs. baseline, per cell
//   cells/<policy>/<cell>/        <cell> is "none" or "rho=<rho>_r=<r>"
//     config.json                 market and simulation parameters
//     manifest.json               seeds, version, timestamp
//     replications.csv            replication,seed,product_id,downloads
//     summary.csv                 replication,total_downloads,tries_total,
//                                 truncated_sessions
//     trajectory.csv              replication,step,total_downloads
//     aggregate.csv               product_id,quality,appeal,mean_downloads,
//                                 sd_downloads
//
// Only the manifests carry timestamps; every CSV is a pure function of the
// spec.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "trialoffer/analysis.hpp"
#include "trialoffer/generators.hpp"
#include "trialoffer/market.hpp"
#include "trialoffer/policies.hpp"
#include "trialoffer/simulation.hpp"

namespace trialoffer {

// Environment variable naming the default output directory of `simulate`.
inline constexpr const char* kOutputDirEnv = "TRIALOFFER_OUTPUT_DIR";

struct ContinuationCell {
  double rho = 0.0;
  double r = 0.0;

  friend bool operator==(const ContinuationCell&,
                         const ContinuationCell&) = default;
};

struct ExplicitProducts {
  std::vector<double> quality;
  std::vector<double> appeal;
};

struct ExperimentSpec {
  std::variant<GaussianInstanceSpec, ExplicitProducts> instance =
      GaussianInstanceSpec{};
  std::variant<VisibilityProfile, std::vector<double>> visibility =
      VisibilityProfile::kHarmonic;
  std::vector<ContinuationCell> sweep;
  std::vector<PolicyKind> policies{std::begin(kAllPolicies),
                                   std::end(kAllPolicies)};
  // Also run every policy without continuation, for improvement rows.
  bool baseline = true;
  std::int64_t steps = 20000;
  std::int64_t rerank_period = 50;
  std::int64_t replications = 100;
  std::uint64_t base_seed = 1;
  std::int64_t max_session_tries = 10000;
  bool social_influence = true;
  std::int64_t trajectory_interval = 0;
  std::string output_dir;  // empty: $TRIALOFFER_OUTPUT_DIR, then "results"

  // Throws ConfigError naming the offending field.
  void validate() const;
  // The generated or explicit instance, without continuation.
  Market base_market() const;
};

// JSON experiment spec; see README for the field list. Throws ParseError.
ExperimentSpec parse_experiment_spec(std::string_view text,
                                     const std::string& source = "");
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);
std::string serialize_experiment_spec(const ExperimentSpec& spec);

// "none" or "rho=<rho>_r=<r>".
std::string cell_name(const std::optional<ContinuationCell>& cell);

struct CellResult {
  PolicyKind policy;
  std::optional<ContinuationCell> continuation;  // nullopt: baseline
  std::filesystem::path directory;               // relative to the store
  SimResult result;
};

struct ExperimentOutcome {
  std::filesystem::path root;
  std::vector<CellResult> cells;
  std::vector<ImprovementRow> improvements;

  const CellResult* find(PolicyKind policy,
                         const std::optional<ContinuationCell>& cell) const;
};

struct RunOptions {
  unsigned threads = 0;
  std::ostream* progress = nullptr;
  // Only used for the manifests.
  std::string timestamp;
};

// Resolves the output directory: explicit argument, then spec.output_dir,
// then $TRIALOFFER_OUTPUT_DIR, then "results".
std::filesystem::path resolve_output_dir(const ExperimentSpec& spec,
                                         const std::filesystem::path& override_dir);

// Runs the full (cell x policy) grid and writes the store. Throws
// ConfigError on an invalid spec and IoError when the store cannot be
// written.
ExperimentOutcome run_experiment(const ExperimentSpec& spec,
                                 const std::filesystem::path& output_dir,
                                 const RunOptions& options = {});

// Efficiency matrix: one line per cell, one column per policy.
std::string format_efficiency_table(const ExperimentOutcome& outcome);

struct PlotDataSummary {
  std::size_t cells = 0;
  std::size_t scatter_rows = 0;
};

// For every cell of the store writes <out>/<policy>/<cell>/scatter.csv
// (product_id,quality,quality_rank,replication,downloads) and
// trajectory.csv (step,mean_total_downloads,min_total_downloads,
// max_total_downloads). Throws IoError when per-replication files are
// missing.
PlotDataSummary write_plot_data(const std::filesystem::path& store,
                                const std::filesystem::path& out);

}  // namespace trialoffer

#endif  // TRIALOFFER_EXPERIMENT_HPP_
