#include "urn/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

namespace urn {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform integer in [0, bound), masked rejection. Engine-deterministic.
std::uint64_t bounded_rand(std::mt19937_64& engine, std::uint64_t bound) {
  if (bound <= 1) return 0;
  std::uint64_t mask = ~std::uint64_t{0};
  const unsigned bits = 64u - static_cast<unsigned>(std::countl_zero(bound - 1));
  if (bits < 64) mask = (std::uint64_t{1} << bits) - 1;
  for (;;) {
    const std::uint64_t value = engine() & mask;
    if (value < bound) return value;
  }
}

/// Samples the composition prior exactly: cumulative numerators over a
/// common denominator, inverted with a uniform integer draw.
class PriorSampler {
 public:
  explicit PriorSampler(const std::vector<Rational>& masses) {
    Int denom = 1;
    for (const Rational& mass : masses) {
      denom = lcm(denom, Int(denominator(mass)));
    }
    cumulative_.reserve(masses.size());
    Int running = 0;
    for (const Rational& mass : masses) {
      running += numerator(mass) * (denom / denominator(mass));
      cumulative_.push_back(running);
    }
    denom_ = denom;
    if (denom <= std::uint64_t(~std::uint64_t{0})) {
      small_denom_ = static_cast<std::uint64_t>(denom);
      small_cumulative_.reserve(cumulative_.size());
      for (const Int& c : cumulative_) {
        small_cumulative_.push_back(static_cast<std::uint64_t>(c));
      }
    }
  }

  int sample(std::mt19937_64& engine) const {
    if (!small_cumulative_.empty()) {
      const std::uint64_t x = bounded_rand(engine, small_denom_);
      const auto it = std::upper_bound(small_cumulative_.begin(),
                                       small_cumulative_.end(), x);
      return static_cast<int>(it - small_cumulative_.begin());
    }
    const Int x = wide_uniform(engine);
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
    return static_cast<int>(it - cumulative_.begin());
  }

 private:
  Int wide_uniform(std::mt19937_64& engine) const {
    const unsigned bits = msb(Int(denom_ - 1)) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - 64 * (words - 1);
    const std::uint64_t top_mask =
        top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
    for (;;) {
      Int value = 0;
      for (unsigned w = 0; w < words; ++w) {
        std::uint64_t word = engine();
        if (w + 1 == words) word &= top_mask;
        value |= Int(word) << (64 * w);
      }
      if (value < denom_) return value;
    }
  }

  Int denom_;
  std::vector<Int> cumulative_;
  std::uint64_t small_denom_ = 0;
  std::vector<std::uint64_t> small_cumulative_;
};

struct ChunkTally {
  std::uint64_t accepted = 0;
  std::uint64_t successes = 0;
  std::uint64_t attempts = 0;
  bool saturated = false;
};

ChunkTally run_chunk(const PriorSampler& sampler, int balls, const Evidence& evidence,
                     Color next, std::uint64_t quota, std::uint64_t attempt_cap,
                     std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  ChunkTally tally;
  const std::size_t k = evidence.size();
  while (tally.accepted < quota) {
    if (tally.attempts >= attempt_cap) {
      tally.saturated = true;
      break;
    }
    ++tally.attempts;
    const int reds = sampler.sample(engine);
    std::uint64_t reds_left = static_cast<std::uint64_t>(reds);
    std::uint64_t balls_left = static_cast<std::uint64_t>(balls);
    bool match = true;
    for (std::size_t i = 0; i < k; ++i) {
      const bool drew_red = bounded_rand(engine, balls_left) < reds_left;
      if (drew_red != (evidence[i] == Color::red)) {
        match = false;
        break;
      }
      if (drew_red) --reds_left;
      --balls_left;
    }
    if (!match) continue;
    const bool drew_red = bounded_rand(engine, balls_left) < reds_left;
    ++tally.accepted;
    if (drew_red == (next == Color::red)) {
      ++tally.successes;
    }
  }
  return tally;
}

SimResult finalize(std::uint64_t accepted, std::uint64_t successes,
                   std::uint64_t attempts) {
  SimResult result;
  result.accepted = accepted;
  result.successes = successes;
  result.attempts = attempts;
  if (accepted > 0) {
    const double p = static_cast<double>(successes) / static_cast<double>(accepted);
    result.estimate = p;
    result.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(accepted));
  }
  return result;
}

}  // namespace

namespace detail {

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk_index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(chunk_index));
}

}  // namespace detail

SimResult simulate_predictive(const UrnScenario& scenario, const Evidence& evidence,
                              Color next, const SimConfig& config) {
  if (config.trials < 1) {
    throw std::domain_error("simulate: trials must be >= 1");
  }
  if (config.chunk_size < 1) {
    throw std::domain_error("simulate: chunk_size must be >= 1");
  }
  std::uint64_t max_attempts = config.max_attempts;
  if (max_attempts == 0) {
    max_attempts = config.trials > (~std::uint64_t{0}) / 1000
                       ? ~std::uint64_t{0}
                       : config.trials * 1000;
  }
  if (max_attempts < config.trials) {
    throw std::domain_error("simulate: max_attempts must be >= trials");
  }
  if (evidence.size() + 1 > static_cast<std::size_t>(scenario.balls)) {
    throw std::domain_error("simulate: urn exhausted");
  }
  if (evidence_probability(scenario, evidence) == 0) {
    throw ConditioningError("simulate: evidence has probability zero");
  }

  const PriorSampler sampler(scenario.prior.masses());
  const std::uint64_t chunk_count =
      (config.trials + config.chunk_size - 1) / config.chunk_size;
  std::vector<ChunkTally> tallies(chunk_count);

  const auto worker = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t i = first; i < chunk_count; i += stride) {
      const std::uint64_t quota =
          std::min(config.chunk_size, config.trials - i * config.chunk_size);
      // Proportional share of the global attempt budget.
      const std::uint64_t cap = std::max<std::uint64_t>(
          quota, static_cast<std::uint64_t>(
                     static_cast<unsigned __int128>(max_attempts) * quota /
                     config.trials));
      tallies[i] = run_chunk(sampler, scenario.balls, evidence, next, quota, cap,
                             detail::substream_seed(config.seed, i));
    }
  };

  unsigned threads = config.threads != 0 ? config.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, chunk_count));
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker, t, threads);
    }
    for (std::thread& thread : pool) {
      thread.join();
    }
  }

  std::uint64_t accepted = 0;
  std::uint64_t successes = 0;
  std::uint64_t attempts = 0;
  bool saturated = false;
  for (const ChunkTally& tally : tallies) {  // chunk-index order
    accepted += tally.accepted;
    successes += tally.successes;
    attempts += tally.attempts;
    saturated = saturated || tally.saturated;
  }
  const SimResult result = finalize(accepted, successes, attempts);
  if (saturated) {
    throw SaturationError("simulate: attempt budget exhausted after " +
                              std::to_string(accepted) + " of " +
                              std::to_string(config.trials) + " accepted trials",
                          result);
  }
  return result;
}

std::pair<double, double> confidence_interval(const SimResult& result, double z) {
  if (result.accepted < 1) {
    throw std::domain_error("confidence_interval: no accepted trials");
  }
  if (!(z > 0)) {
    throw std::domain_error("confidence_interval: z must be positive");
  }
  const double lo = std::max(0.0, result.estimate - z * result.std_error);
  const double hi = std::min(1.0, result.estimate + z * result.std_error);
  return {lo, hi};
}

}  // namespace urn
