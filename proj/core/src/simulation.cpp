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

#include "trialoffer/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "trialoffer/errors.hpp"

namespace trialoffer {

namespace {

// Categorical sampling by inversion of the cumulative trial weights.
class TrialSampler {
 public:
  void rebuild(const Market& market, const Ranking& ranking,
               const std::vector<std::int64_t>& signal) {
    const auto& v = market.visibility();
    const auto& a = market.appeal();
    cumulative_.resize(market.size());
    double total = 0.0;
    for (std::size_t i = 0; i < cumulative_.size(); ++i) {
      total += v[ranking.position_of(i)] *
               (a[i] + static_cast<double>(signal[i]));
      cumulative_[i] = total;
    }
  }

  std::size_t sample(double u) const {
    const double x = u * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
    if (it == cumulative_.end()) return cumulative_.size() - 1;
    return static_cast<std::size_t>(it - cumulative_.begin());
  }

 private:
  std::vector<double> cumulative_;
};

SessionOutcome session(const TrialSampler& sampler, const Market& market,
                       RandomStream& stream, std::int64_t max_tries) {
  const auto& q = market.quality();
  const auto& c = market.continuation_probabilities();
  SessionOutcome outcome;
  while (outcome.tries < max_tries) {
    const std::size_t i = sampler.sample(stream.uniform());
    ++outcome.tries;
    const double u = stream.uniform();
    if (u < q[i]) {
      outcome.purchased = i;
      return outcome;
    }
    if (!(u < q[i] + c[i])) return outcome;
  }
  outcome.truncated = true;
  return outcome;
}

std::vector<std::int64_t> trajectory_steps(const SimConfig& config) {
  const std::int64_t k = config.effective_trajectory_interval();
  std::vector<std::int64_t> steps;
  for (std::int64_t t = k; t <= config.steps; t += k) steps.push_back(t);
  if (steps.empty() || steps.back() != config.steps) {
    steps.push_back(config.steps);
  }
  return steps;
}

ReplicationResult simulate_replication(const SimConfig& config,
                                       std::int64_t index) {
  const Market& market = config.market;
  const std::size_t n = market.size();
  ReplicationResult result;
  result.index = index;
  result.seed = replication_seed(config.base_seed,
                                 static_cast<std::uint64_t>(index));
  result.downloads.assign(n, 0);
  RandomStream stream(result.seed);

  const std::int64_t k = config.effective_trajectory_interval();
  SocialState state(n);
  Ranking ranking;
  TrialSampler sampler;
  std::int64_t total = 0;
  for (std::int64_t t = 0; t < config.steps; ++t) {
    if (t % config.rerank_period == 0) {
      ranking = rank_products(config.policy, market, state, stream);
      sampler.rebuild(market, ranking, state.downloads());
    }
    const SessionOutcome outcome =
        session(sampler, market, stream, config.max_session_tries);
    result.tries_total += outcome.tries;
    if (outcome.truncated) ++result.truncated_sessions;
    if (outcome.purchased) {
      const std::size_t i = *outcome.purchased;
      ++result.downloads[i];
      ++total;
      if (config.social_influence) {
        state.advance_with_purchase(i);
        sampler.rebuild(market, ranking, state.downloads());
      } else {
        state.advance();
      }
    } else {
      state.advance();
    }
    if ((t + 1) % k == 0 || t + 1 == config.steps) {
      result.trajectory.push_back(total);
    }
  }
  return result;
}

SimResult aggregate(const SimConfig& config,
                    std::vector<ReplicationResult> replications) {
  SimResult result{.config = config};
  result.seed_used = config.base_seed;
  result.trajectory_steps = trajectory_steps(config);
  const std::size_t n = config.market.size();
  const double w = static_cast<double>(replications.size());
  result.downloads_final.assign(n, 0.0);
  result.downloads_trajectory.assign(result.trajectory_steps.size(), 0.0);
  for (const auto& rep : replications) {
    for (std::size_t i = 0; i < n; ++i) {
      result.downloads_final[i] += static_cast<double>(rep.downloads[i]);
    }
    for (std::size_t s = 0; s < rep.trajectory.size(); ++s) {
      result.downloads_trajectory[s] += static_cast<double>(rep.trajectory[s]);
    }
    result.tries_total += rep.tries_total;
    result.truncated_sessions += rep.truncated_sessions;
  }
  for (double& x : result.downloads_final) x /= w;
  for (double& x : result.downloads_trajectory) x /= w;
  result.per_replication = std::move(replications);
  return result;
}

}  // namespace

void SimConfig::validate() const {
  if (steps < 1) throw ConfigError("steps must be >= 1");
  if (rerank_period < 1) throw ConfigError("rerank_period must be >= 1");
  if (replications < 1) throw ConfigError("replications must be >= 1");
  if (max_session_tries < 1) {
    throw ConfigError("max_session_tries must be >= 1");
  }
  if (trajectory_interval < 0) {
    throw ConfigError("trajectory_interval must be >= 0");
  }
  if (market.is_reduced()) {
    throw ConfigError("market: reduced markets cannot be simulated");
  }
}

std::int64_t SimConfig::effective_trajectory_interval() const {
  if (trajectory_interval > 0) return trajectory_interval;
  return std::max<std::int64_t>(1, steps / 200);
}

SessionOutcome run_session(const Market& market, const Ranking& ranking,
                           const SocialState& state, RandomStream& stream,
                           std::int64_t max_tries) {
  if (ranking.size() != market.size() || state.size() != market.size()) {
    throw DomainError("ranking and state must match the market size");
  }
  if (max_tries < 1) throw DomainError("max_tries must be >= 1");
  TrialSampler sampler;
  sampler.rebuild(market, ranking, state.downloads());
  return session(sampler, market, stream, max_tries);
}

std::int64_t ReplicationResult::total_downloads() const {
  return std::accumulate(downloads.begin(), downloads.end(), std::int64_t{0});
}

double SimResult::efficiency() const {
  double sum = 0.0;
  for (const auto& rep : per_replication) {
    sum += static_cast<double>(rep.total_downloads());
  }
  return sum / static_cast<double>(per_replication.size());
}

double SimResult::efficiency_standard_error() const {
  const std::size_t w = per_replication.size();
  if (w < 2) return 0.0;
  const double mean = efficiency();
  double ss = 0.0;
  for (const auto& rep : per_replication) {
    const double d = static_cast<double>(rep.total_downloads()) - mean;
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(w - 1) / static_cast<double>(w));
}

SimResult run_simulation(const SimConfig& config,
                         std::int64_t replication_index) {
  config.validate();
  std::vector<ReplicationResult> reps;
  reps.push_back(simulate_replication(config, replication_index));
  return aggregate(config, std::move(reps));
}

SimResult run_replications(const SimConfig& config, unsigned threads) {
  config.validate();
  const auto count = static_cast<std::size_t>(config.replications);
  std::vector<ReplicationResult> reps(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        reps[i] = simulate_replication(config, static_cast<std::int64_t>(i));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return aggregate(config, std::move(reps));
}

std::vector<double> first_purchase_frequencies(
    const Market& market, const Ranking& ranking, const SocialState& state,
    std::int64_t purchases, std::uint64_t seed,
    std::int64_t max_session_tries) {
  if (purchases < 1) throw DomainError("purchases must be >= 1");
  // Also rejects markets where every quality is zero.
  (void)next_purchase_distribution(market, ranking, state);
  TrialSampler sampler;
  sampler.rebuild(market, ranking, state.downloads());
  RandomStream stream(seed);
  std::vector<std::int64_t> counts(market.size(), 0);
  std::int64_t observed = 0;
  while (observed < purchases) {
    const SessionOutcome outcome =
        session(sampler, market, stream, max_session_tries);
    if (outcome.purchased) {
      ++counts[*outcome.purchased];
      ++observed;
    }
  }
  std::vector<double> freq(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    freq[i] = static_cast<double>(counts[i]) / static_cast<double>(purchases);
  }
  return freq;
}

}  // namespace trialoffer
