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

#include "trialoffer/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <system_error>

#include "json_util.hpp"
#include "trialoffer/csv.hpp"
#include "trialoffer/errors.hpp"
#include "trialoffer/io.hpp"

#ifndef TRIALOFFER_VERSION
#define TRIALOFFER_VERSION "unknown"
#endif

namespace trialoffer {

namespace fs = std::filesystem;
using json_util::Json;
using json_util::Reader;

namespace {

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json market_json(const Market& market) {
  return Json::parse(serialize_market(market));
}

Json cell_config_json(const SimConfig& config) {
  Json j = Json::object();
  j["policy"] = policy_name(config.policy);
  j["steps"] = config.steps;
  j["rerank_period"] = config.rerank_period;
  j["replications"] = config.replications;
  j["base_seed"] = config.base_seed;
  j["max_session_tries"] = config.max_session_tries;
  j["social_influence"] = config.social_influence;
  j["trajectory_interval"] = config.effective_trajectory_interval();
  j["market"] = market_json(config.market);
  return j;
}

SimConfig parse_cell_config(std::string_view text, const std::string& source) {
  const Json root = json_util::parse(text, source);
  const Reader r(root, "", source);
  const auto policy = parse_policy(r.string("policy"));
  if (!policy) r.fail("policy", "unknown policy");
  SimConfig config{
      .market = parse_market(r.child("market").node().dump(), source)};
  config.policy = *policy;
  config.steps = r.integer("steps");
  config.rerank_period = r.integer("rerank_period");
  config.replications = r.integer("replications");
  config.base_seed = r.unsigned_or("base_seed", 0);
  config.max_session_tries = r.integer("max_session_tries");
  config.social_influence = r.boolean_or("social_influence", true);
  config.trajectory_interval = r.integer_or("trajectory_interval", 0);
  return config;
}

void write_cell(const fs::path& dir, const SimResult& result,
                const std::string& timestamp) {
  const SimConfig& config = result.config;
  const Market& market = config.market;
  const std::size_t n = market.size();

  write_text_file(dir / "config.json", cell_config_json(config).dump(2) + "\n");

  Json manifest = Json::object();
  manifest["tool"] = "trialoffer";
  manifest["version"] = TRIALOFFER_VERSION;
  manifest["created_at"] = timestamp;
  manifest["base_seed"] = config.base_seed;
  Json seeds = Json::array();
  for (const auto& rep : result.per_replication) seeds.push_back(rep.seed);
  manifest["replication_seeds"] = seeds;
  write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");

  CsvTable reps({"replication", "seed", "product_id", "downloads"});
  CsvTable summary(
      {"replication", "total_downloads", "tries_total", "truncated_sessions"});
  CsvTable trajectory({"replication", "step", "total_downloads"});
  for (const auto& rep : result.per_replication) {
    for (std::size_t i = 0; i < n; ++i) {
      reps.add(rep.index).add(rep.seed).add(i + 1).add(rep.downloads[i]);
      reps.end_row();
    }
    summary.add(rep.index)
        .add(rep.total_downloads())
        .add(rep.tries_total)
        .add(rep.truncated_sessions);
    summary.end_row();
    for (std::size_t s = 0; s < rep.trajectory.size(); ++s) {
      trajectory.add(rep.index)
          .add(result.trajectory_steps[s])
          .add(rep.trajectory[s]);
      trajectory.end_row();
    }
  }
  write_text_file(dir / "replications.csv", reps.str());
  write_text_file(dir / "summary.csv", summary.str());
  write_text_file(dir / "trajectory.csv", trajectory.str());

  CsvTable aggregate(
      {"product_id", "quality", "appeal", "mean_downloads", "sd_downloads"});
  const double w = static_cast<double>(result.per_replication.size());
  for (std::size_t i = 0; i < n; ++i) {
    double ss = 0.0;
    for (const auto& rep : result.per_replication) {
      const double d =
          static_cast<double>(rep.downloads[i]) - result.downloads_final[i];
      ss += d * d;
    }
    const double sd = w > 1.0 ? std::sqrt(ss / (w - 1.0)) : 0.0;
    aggregate.add(i + 1)
        .add(market.quality()[i])
        .add(market.appeal()[i])
        .add(result.downloads_final[i])
        .add(sd);
    aggregate.end_row();
  }
  write_text_file(dir / "aggregate.csv", aggregate.str());
}

std::int64_t to_int(const std::string& cell, const std::string& source) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(cell, &used);
    if (used != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw ParseError(source, 0, "expected an integer, found '" + cell + "'");
  }
}

std::size_t column(const CsvTable& table, const std::string& name,
                   const std::string& source) {
  const auto& h = table.header();
  const auto it = std::find(h.begin(), h.end(), name);
  if (it == h.end()) {
    throw ParseError(source, 1, "missing column '" + name + "'");
  }
  return static_cast<std::size_t>(it - h.begin());
}

}  // namespace

void ExperimentSpec::validate() const {
  if (sweep.empty()) throw ConfigError("sweep must contain at least one cell");
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    try {
      (void)ContinuationSpec::polynomial(sweep[k].rho, sweep[k].r);
    } catch (const DomainError& e) {
      throw ConfigError("sweep[" + std::to_string(k + 1) + "]: " + e.what());
    }
  }
  if (policies.empty()) throw ConfigError("policies must not be empty");
  if (steps < 1) throw ConfigError("steps must be >= 1");
  if (rerank_period < 1) throw ConfigError("rerank_period must be >= 1");
  if (replications < 1) throw ConfigError("replications must be >= 1");
  if (max_session_tries < 1) {
    throw ConfigError("max_session_tries must be >= 1");
  }
  if (trajectory_interval < 0) {
    throw ConfigError("trajectory_interval must be >= 0");
  }
  if (const auto* g = std::get_if<GaussianInstanceSpec>(&instance)) {
    g->validate();
  }
  (void)base_market();
}

Market ExperimentSpec::base_market() const {
  std::vector<double> quality;
  std::vector<double> appeal;
  if (const auto* g = std::get_if<GaussianInstanceSpec>(&instance)) {
    ProductDraw draw = generate_gaussian_instance(*g);
    quality = std::move(draw.quality);
    appeal = std::move(draw.appeal);
  } else {
    const auto& e = std::get<ExplicitProducts>(instance);
    quality = e.quality;
    appeal = e.appeal;
  }
  std::vector<double> v;
  if (const auto* p = std::get_if<VisibilityProfile>(&visibility)) {
    v = visibility_profile(*p, quality.size());
  } else {
    v = std::get<std::vector<double>>(visibility);
  }
  try {
    return Market(std::move(quality), std::move(appeal), std::move(v));
  } catch (const DomainError& e) {
    throw ConfigError(std::string("instance: ") + e.what());
  }
}

ExperimentSpec parse_experiment_spec(std::string_view text,
                                     const std::string& source) {
  const Json root = json_util::parse(text, source);
  const Reader r(root, "", source);
  ExperimentSpec spec;

  if (r.has("instance")) {
    const Reader inst = r.child("instance");
    const std::string kind = inst.string_or("kind", "gaussian");
    if (kind == "gaussian") {
      GaussianInstanceSpec g;
      const std::int64_t n = inst.integer_or("n", 50);
      if (n < 1) inst.fail("instance.n", "must be >= 1");
      g.n = static_cast<std::size_t>(n);
      g.mean_quality = inst.real_or("mean_quality", g.mean_quality);
      g.sd_quality = inst.real_or("sd_quality", g.sd_quality);
      g.mean_appeal = inst.real_or("mean_appeal", g.mean_appeal);
      g.sd_appeal = inst.real_or("sd_appeal", g.sd_appeal);
      if (inst.has("quality_range")) {
        const auto range = inst.reals("quality_range");
        if (range.size() != 2) inst.fail("instance.quality_range", "expected [min, max]");
        g.quality_min = range[0];
        g.quality_max = range[1];
      }
      if (inst.has("appeal_range")) {
        const auto range = inst.reals("appeal_range");
        if (range.size() != 2) inst.fail("instance.appeal_range", "expected [min, max]");
        g.appeal_min = range[0];
        g.appeal_max = range[1];
      }
      g.seed = inst.unsigned_or("seed", g.seed);
      spec.instance = g;
    } else if (kind == "explicit") {
      spec.instance =
          ExplicitProducts{inst.reals("quality"), inst.reals("appeal")};
    } else {
      inst.fail("instance.kind", "unknown instance kind '" + kind +
                                     "' (expected gaussian or explicit)");
    }
  }

  if (r.has("visibility")) {
    const Json& v = root.at("visibility");
    if (v.is_string()) {
      const auto profile = parse_visibility_profile(v.get<std::string>());
      if (!profile) {
        r.fail("visibility", "unknown profile '" + v.get<std::string>() +
                                 "' (expected harmonic or uniform)");
      }
      spec.visibility = *profile;
    } else {
      spec.visibility = json_util::reals_of(v, "visibility", source);
    }
  }

  const Json& sweep = r.child("sweep").node();
  if (!sweep.is_array()) r.fail("sweep", "expected an array");
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    const Reader cell(sweep[k], "sweep[" + std::to_string(k + 1) + "]",
                      source);
    spec.sweep.push_back({cell.real("rho"), cell.real("r")});
  }

  if (r.has("policies")) {
    const Json& p = root.at("policies");
    if (!p.is_array()) r.fail("policies", "expected an array");
    spec.policies.clear();
    for (std::size_t k = 0; k < p.size(); ++k) {
      const std::string field = "policies[" + std::to_string(k + 1) + "]";
      if (!p[k].is_string()) r.fail(field, "expected a string");
      const auto kind = parse_policy(p[k].get<std::string>());
      if (!kind) {
        r.fail(field, "unknown policy '" + p[k].get<std::string>() + "'");
      }
      spec.policies.push_back(*kind);
    }
  }

  spec.baseline = r.boolean_or("baseline", spec.baseline);
  spec.steps = r.integer_or("steps", spec.steps);
  spec.rerank_period = r.integer_or("rerank_period", spec.rerank_period);
  spec.replications = r.integer_or("replications", spec.replications);
  spec.base_seed = r.unsigned_or("base_seed", spec.base_seed);
  spec.max_session_tries =
      r.integer_or("max_session_tries", spec.max_session_tries);
  spec.social_influence =
      r.boolean_or("social_influence", spec.social_influence);
  spec.trajectory_interval =
      r.integer_or("trajectory_interval", spec.trajectory_interval);
  spec.output_dir = r.string_or("output_dir", "");

  try {
    spec.validate();
  } catch (const ConfigError& e) {
    throw ParseError(source, 0, std::string("invalid experiment: ") + e.what());
  }
  return spec;
}

ExperimentSpec load_experiment_spec(const fs::path& path) {
  return parse_experiment_spec(read_text_file(path), path.string());
}

std::string serialize_experiment_spec(const ExperimentSpec& spec) {
  Json j = Json::object();
  if (const auto* g = std::get_if<GaussianInstanceSpec>(&spec.instance)) {
    j["instance"] = {{"kind", "gaussian"},
                     {"n", g->n},
                     {"mean_quality", g->mean_quality},
                     {"sd_quality", g->sd_quality},
                     {"mean_appeal", g->mean_appeal},
                     {"sd_appeal", g->sd_appeal},
                     {"quality_range", {g->quality_min, g->quality_max}},
                     {"appeal_range", {g->appeal_min, g->appeal_max}},
                     {"seed", g->seed}};
  } else {
    const auto& e = std::get<ExplicitProducts>(spec.instance);
    j["instance"] = {
        {"kind", "explicit"}, {"quality", e.quality}, {"appeal", e.appeal}};
  }
  if (const auto* p = std::get_if<VisibilityProfile>(&spec.visibility)) {
    j["visibility"] = visibility_profile_name(*p);
  } else {
    j["visibility"] = std::get<std::vector<double>>(spec.visibility);
  }
  Json sweep = Json::array();
  for (const auto& cell : spec.sweep) {
    sweep.push_back({{"rho", cell.rho}, {"r", cell.r}});
  }
  j["sweep"] = sweep;
  Json policies = Json::array();
  for (PolicyKind kind : spec.policies) policies.push_back(policy_name(kind));
  j["policies"] = policies;
  j["baseline"] = spec.baseline;
  j["steps"] = spec.steps;
  j["rerank_period"] = spec.rerank_period;
  j["replications"] = spec.replications;
  j["base_seed"] = spec.base_seed;
  j["max_session_tries"] = spec.max_session_tries;
  j["social_influence"] = spec.social_influence;
  j["trajectory_interval"] = spec.trajectory_interval;
  if (!spec.output_dir.empty()) j["output_dir"] = spec.output_dir;
  return j.dump(2) + "\n";
}

std::string cell_name(const std::optional<ContinuationCell>& cell) {
  if (!cell) return "none";
  return "rho=" + format_real(cell->rho) + "_r=" + format_real(cell->r);
}

const CellResult* ExperimentOutcome::find(
    PolicyKind policy, const std::optional<ContinuationCell>& cell) const {
  for (const auto& c : cells) {
    if (c.policy == policy && c.continuation == cell) return &c;
  }
  return nullptr;
}

fs::path resolve_output_dir(const ExperimentSpec& spec,
                            const fs::path& override_dir) {
  if (!override_dir.empty()) return override_dir;
  if (!spec.output_dir.empty()) return spec.output_dir;
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return env;
  return "results";
}

ExperimentOutcome run_experiment(const ExperimentSpec& spec,
                                 const fs::path& output_dir,
                                 const RunOptions& options) {
  spec.validate();
  const Market base = spec.base_market();
  const std::string timestamp =
      options.timestamp.empty() ? utc_timestamp() : options.timestamp;

  ExperimentOutcome outcome;
  outcome.root = output_dir;
  {
    std::error_code ec;
    fs::create_directories(output_dir, ec);
    if (ec) {
      throw IoError("cannot create output directory " + output_dir.string() +
                    ": " + ec.message());
    }
    // Fail before simulating if the directory is not writable.
    write_text_file(output_dir / "manifest.json",
                    "{\n  \"status\": \"running\"\n}\n");
  }

  std::vector<std::optional<ContinuationCell>> conts;
  if (spec.baseline) conts.emplace_back(std::nullopt);
  for (const auto& cell : spec.sweep) conts.emplace_back(cell);

  const std::size_t total = conts.size() * spec.policies.size();
  std::size_t done = 0;
  for (const auto& cont : conts) {
    for (PolicyKind policy : spec.policies) {
      SimConfig config{
          .market = cont ? base.with_continuation(
                               ContinuationSpec::polynomial(cont->rho, cont->r))
                         : base};
      config.policy = policy;
      config.steps = spec.steps;
      config.rerank_period = spec.rerank_period;
      config.replications = spec.replications;
      config.base_seed = spec.base_seed;
      config.max_session_tries = spec.max_session_tries;
      config.social_influence = spec.social_influence;
      config.trajectory_interval = spec.trajectory_interval;

      const fs::path rel =
          fs::path("cells") / std::string(policy_name(policy)) / cell_name(cont);
      CellResult cell{.policy = policy,
                      .continuation = cont,
                      .directory = rel,
                      .result = run_replications(config, options.threads)};
      write_cell(output_dir / rel, cell.result, timestamp);
      ++done;
      if (options.progress) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "[%zu/%zu] %-7s %-18s efficiency %10.1f (se %.1f)\n",
                      done, total, std::string(policy_label(policy)).c_str(),
                      cell_name(cont).c_str(), cell.result.efficiency(),
                      cell.result.efficiency_standard_error());
        *options.progress << buf << std::flush;
      }
      outcome.cells.push_back(std::move(cell));
    }
  }

  CsvTable efficiency({"policy", "cell", "rho", "r", "efficiency",
                       "standard_error", "tries_total", "truncated_sessions"});
  for (const auto& cell : outcome.cells) {
    efficiency.add(policy_name(cell.policy)).add(cell_name(cell.continuation));
    if (cell.continuation) {
      efficiency.add(cell.continuation->rho).add(cell.continuation->r);
    } else {
      efficiency.add(std::string_view{}).add(std::string_view{});
    }
    efficiency.add(cell.result.efficiency())
        .add(cell.result.efficiency_standard_error())
        .add(cell.result.tries_total)
        .add(cell.result.truncated_sessions);
    efficiency.end_row();
  }
  write_text_file(output_dir / "efficiency.csv", efficiency.str());

  if (spec.baseline) {
    std::vector<ResultPair> pairs;
    for (const auto& cell : outcome.cells) {
      if (!cell.continuation) continue;
      const CellResult* base_cell = outcome.find(cell.policy, std::nullopt);
      pairs.push_back({&cell.result, &base_cell->result});
    }
    outcome.improvements = improvement_table(pairs);
  }
  CsvTable improvement({"rho", "r", "policy", "efficiency_with",
                        "efficiency_without", "improvement_pct"});
  for (const auto& row : outcome.improvements) {
    improvement.add(row.rho)
        .add(row.r)
        .add(policy_name(row.policy))
        .add(row.efficiency_with)
        .add(row.efficiency_without)
        .add(row.improvement_pct);
    improvement.end_row();
  }
  write_text_file(output_dir / "improvement.csv", improvement.str());

  Json manifest = Json::object();
  manifest["tool"] = "trialoffer";
  manifest["version"] = TRIALOFFER_VERSION;
  manifest["created_at"] = timestamp;
  manifest["status"] = "complete";
  manifest["spec"] = Json::parse(serialize_experiment_spec(spec));
  Json cells = Json::array();
  for (const auto& cell : outcome.cells) {
    cells.push_back({{"directory", cell.directory.generic_string()},
                     {"policy", policy_name(cell.policy)},
                     {"cell", cell_name(cell.continuation)},
                     {"base_seed", cell.result.seed_used}});
  }
  manifest["cells"] = cells;
  write_text_file(output_dir / "manifest.json", manifest.dump(2) + "\n");
  return outcome;
}

std::string format_efficiency_table(const ExperimentOutcome& outcome) {
  std::map<std::string, std::map<PolicyKind, double>> grid;
  std::vector<std::string> order;
  for (const auto& cell : outcome.cells) {
    const std::string name = cell_name(cell.continuation);
    if (!grid.contains(name)) order.push_back(name);
    grid[name][cell.policy] = cell.result.efficiency();
  }
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-20s", "cell");
  out << buf;
  for (PolicyKind kind : kAllPolicies) {
    std::snprintf(buf, sizeof buf, "%12s",
                  std::string(policy_label(kind)).c_str());
    out << buf;
  }
  out << '\n';
  for (const auto& name : order) {
    std::snprintf(buf, sizeof buf, "%-20s", name.c_str());
    out << buf;
    for (PolicyKind kind : kAllPolicies) {
      const auto it = grid[name].find(kind);
      if (it == grid[name].end()) {
        std::snprintf(buf, sizeof buf, "%12s", "-");
      } else {
        std::snprintf(buf, sizeof buf, "%12.1f", it->second);
      }
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

PlotDataSummary write_plot_data(const fs::path& store, const fs::path& out) {
  const fs::path cells_root = store / "cells";
  std::error_code ec;
  if (!fs::is_directory(cells_root, ec)) {
    throw IoError("not a result store (missing " + cells_root.string() + ")");
  }
  std::vector<fs::path> cell_dirs;
  for (const auto& policy_dir : fs::directory_iterator(cells_root)) {
    if (!policy_dir.is_directory()) continue;
    for (const auto& cell_dir : fs::directory_iterator(policy_dir.path())) {
      if (cell_dir.is_directory()) cell_dirs.push_back(cell_dir.path());
    }
  }
  std::sort(cell_dirs.begin(), cell_dirs.end());
  if (cell_dirs.empty()) {
    throw IoError("result store " + store.string() + " contains no cells");
  }

  PlotDataSummary summary;
  for (const fs::path& dir : cell_dirs) {
    for (const char* required :
         {"config.json", "replications.csv", "trajectory.csv"}) {
      if (!fs::exists(dir / required)) {
        throw IoError("missing per-replication file " +
                      (dir / required).string());
      }
    }
    const std::string config_source = (dir / "config.json").string();
    SimConfig config =
        parse_cell_config(read_text_file(dir / "config.json"), config_source);
    const std::size_t n = config.market.size();

    const std::string reps_source = (dir / "replications.csv").string();
    const CsvTable reps =
        parse_csv(read_text_file(dir / "replications.csv"), reps_source);
    const std::size_t c_rep = column(reps, "replication", reps_source);
    const std::size_t c_seed = column(reps, "seed", reps_source);
    const std::size_t c_prod = column(reps, "product_id", reps_source);
    const std::size_t c_down = column(reps, "downloads", reps_source);
    std::map<std::int64_t, ReplicationResult> by_rep;
    for (const auto& row : reps.rows()) {
      const std::int64_t index = to_int(row[c_rep], reps_source);
      ReplicationResult& rep = by_rep[index];
      if (rep.downloads.empty()) {
        rep.index = index;
        rep.seed = std::stoull(row[c_seed]);
        rep.downloads.assign(n, 0);
      }
      const std::int64_t product = to_int(row[c_prod], reps_source);
      if (product < 1 || static_cast<std::size_t>(product) > n) {
        throw ParseError(reps_source, 0,
                         "product_id " + row[c_prod] + " out of range");
      }
      rep.downloads[static_cast<std::size_t>(product - 1)] =
          to_int(row[c_down], reps_source);
    }
    SimResult result{.config = config};
    for (auto& [index, rep] : by_rep) {
      result.per_replication.push_back(std::move(rep));
    }

    const fs::path target =
        out / dir.parent_path().filename() / dir.filename();
    CsvTable scatter(
        {"product_id", "quality", "quality_rank", "replication", "downloads"});
    for (const ScatterRow& row :
         download_quality_scatter(result, config.market)) {
      scatter.add(row.product_id)
          .add(row.quality)
          .add(row.quality_rank)
          .add(row.replication)
          .add(row.downloads);
      scatter.end_row();
    }
    summary.scatter_rows += scatter.rows().size();
    write_text_file(target / "scatter.csv", scatter.str());

    const std::string traj_source = (dir / "trajectory.csv").string();
    const CsvTable traj =
        parse_csv(read_text_file(dir / "trajectory.csv"), traj_source);
    const std::size_t c_step = column(traj, "step", traj_source);
    const std::size_t c_total = column(traj, "total_downloads", traj_source);
    struct Acc {
      double sum = 0.0;
      std::int64_t min = 0;
      std::int64_t max = 0;
      std::int64_t count = 0;
    };
    std::map<std::int64_t, Acc> by_step;
    for (const auto& row : traj.rows()) {
      const std::int64_t step = to_int(row[c_step], traj_source);
      const std::int64_t total = to_int(row[c_total], traj_source);
      Acc& acc = by_step[step];
      acc.min = acc.count == 0 ? total : std::min(acc.min, total);
      acc.max = acc.count == 0 ? total : std::max(acc.max, total);
      acc.sum += static_cast<double>(total);
      ++acc.count;
    }
    CsvTable mean({"step", "mean_total_downloads", "min_total_downloads",
                   "max_total_downloads"});
    for (const auto& [step, acc] : by_step) {
      mean.add(step)
          .add(acc.sum / static_cast<double>(acc.count))
          .add(acc.min)
          .add(acc.max);
      mean.end_row();
    }
    write_text_file(target / "trajectory.csv", mean.str());
    ++summary.cells;
  }
  return summary;
}

}  // namespace trialoffer
