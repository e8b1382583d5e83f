#pragma once

#include "urn/urn_model.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace urn {

struct SimConfig {
  std::uint64_t trials = 0;          // accepted-trial target, >= 1
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 65536;  // accepted trials per deterministic substream
  std::uint64_t max_attempts = 0;    // rejection cap; 0 means 1000 * trials
  unsigned threads = 0;              // 0 means hardware concurrency
};

struct SimResult {
  std::uint64_t accepted = 0;
  std::uint64_t successes = 0;
  std::uint64_t attempts = 0;
  double estimate = 0.0;   // successes / accepted
  double std_error = 0.0;  // sqrt(p(1-p)/accepted)

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// max_attempts ran out before reaching the accepted-trial target.
/// Carries the deterministic partial tally.
struct SaturationError : std::runtime_error {
  SaturationError(std::string message, SimResult partial_tally)
      : std::runtime_error(std::move(message)), partial(partial_tally) {}
  SimResult partial;
};

/// Rejection-sampled estimate of predictive_next: simulate the
/// unconditional experiment (draw R from the prior, then ordered draws
/// without replacement), keep trials whose first k draws match the
/// evidence, and tally whether draw k+1 shows `next`.
///
/// Deterministic given (scenario, evidence, next, seed, chunk_size,
/// trials) regardless of the thread count. Substreams: chunk i of
/// `chunk_size` accepted trials runs on mt19937_64 seeded by a
/// splitmix64 hash of (seed, i); chunk tallies merge in index order.
SimResult simulate_predictive(const UrnScenario& scenario, const Evidence& evidence,
                              Color next, const SimConfig& config);

/// (estimate - z * std_error, estimate + z * std_error), clamped to [0, 1].
std::pair<double, double> confidence_interval(const SimResult& result, double z);

namespace detail {
/// Per-chunk substream seed; exposed for the determinism tests.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk_index);
}  // namespace detail

}  // namespace urn
