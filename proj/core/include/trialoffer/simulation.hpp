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

#ifndef TRIALOFFER_SIMULATION_HPP_
#define TRIALOFFER_SIMULATION_HPP_

// Agent-based simulation of a dynamic trial-offer market. Each participant
// is shown the current ranking and runs one session:
//
//   1. sample a product i with probability p_i(sigma, d);
//   2. purchase it with probability q_i (session ends, d_i += 1 when social
//      influence is on); otherwise continue at step 1 with probability c_i,
//      or leave.
//
// c_i is the unconditional probability of continuing after sampling i, so a
// single uniform draw u decides: u < q_i purchase, u < q_i + c_i continue,
// otherwise leave. Re-draws sample from the full list with the same ranking
// and signal. Rankings are recomputed every `rerank_period` participants.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "trialoffer/market.hpp"
#include "trialoffer/policies.hpp"
#include "trialoffer/random.hpp"

namespace trialoffer {

struct SimConfig {
  Market market;
  PolicyKind policy = PolicyKind::kQuality;
  std::int64_t steps = 20000;
  std::int64_t rerank_period = 50;
  std::int64_t replications = 1;
  std::uint64_t base_seed = 0;
  std::int64_t max_session_tries = 10000;
  // Off is the independent condition: d stays at zero.
  bool social_influence = true;
  // Trajectory sampling interval K; 0 selects max(1, steps / 200).
  std::int64_t trajectory_interval = 0;

  // Throws ConfigError naming the first invalid field.
  void validate() const;
  std::int64_t effective_trajectory_interval() const;
};

struct SessionOutcome {
  std::optional<std::size_t> purchased;
  std::int64_t tries = 0;
  bool truncated = false;
};

// Runs one participant session against a frozen (ranking, state).
SessionOutcome run_session(const Market& market, const Ranking& ranking,
                           const SocialState& state, RandomStream& stream,
                           std::int64_t max_tries);

struct ReplicationResult {
  std::int64_t index = 0;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> downloads;  // per product
  // Cumulative total downloads after each step listed in
  // SimResult::trajectory_steps.
  std::vector<std::int64_t> trajectory;
  std::int64_t tries_total = 0;
  std::int64_t truncated_sessions = 0;

  std::int64_t total_downloads() const;
  friend bool operator==(const ReplicationResult&,
                         const ReplicationResult&) = default;
};

struct SimResult {
  SimConfig config;
  std::uint64_t seed_used = 0;
  std::vector<std::int64_t> trajectory_steps;
  // Means over replications.
  std::vector<double> downloads_final;
  std::vector<double> downloads_trajectory;
  // Sums over replications.
  std::int64_t tries_total = 0;
  std::int64_t truncated_sessions = 0;
  std::vector<ReplicationResult> per_replication;

  // Mean total downloads per replication (the market efficiency).
  double efficiency() const;
  // Standard error of efficiency() across replications (0 when W = 1).
  double efficiency_standard_error() const;
};

// One replication, seeded by replication_seed(base_seed, index).
SimResult run_simulation(const SimConfig& config,
                         std::int64_t replication_index);

// All cfg.replications replications. Replications are distributed over
// `threads` workers (0 = hardware concurrency); the result does not depend
// on scheduling.
SimResult run_replications(const SimConfig& config, unsigned threads = 0);

// Monte Carlo law of the next purchased product under the frozen
// (ranking, state): repeats sessions until `purchases` purchases have been
// observed and returns their empirical frequencies. Throws DomainError if
// no product can ever be purchased.
std::vector<double> first_purchase_frequencies(
    const Market& market, const Ranking& ranking, const SocialState& state,
    std::int64_t purchases, std::uint64_t seed,
    std::int64_t max_session_tries = 10000);

}  // namespace trialoffer

#endif  // TRIALOFFER_SIMULATION_HPP_
