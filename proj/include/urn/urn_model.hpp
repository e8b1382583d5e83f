#pragma once

#include "urn/exact.hpp"

#include <stdexcept>
#include <string_view>
#include <vector>

namespace urn {

/// Conditioning on a zero-probability event. Always an explicit error,
/// never a silent 0 or NaN-like answer.
struct ConditioningError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Largest supported urn; posterior vectors stay dense up to this size.
inline constexpr int kMaxBalls = 10000;

enum class Color { red, green };

Color complement(Color color);
std::string_view color_name(Color color);
Color parse_color(std::string_view name);  // throws std::invalid_argument

/// Ordered draws without replacement, as observed.
using Evidence = std::vector<Color>;

/// Distribution over the number of red balls R in {0..N}.
class CompositionPrior {
 public:
  enum class Kind { uniform, point, binomial, custom };

  static CompositionPrior uniform(int balls);
  static CompositionPrior point(int balls, int reds);
  static CompositionPrior binomial(int balls, const Rational& p);
  /// Weights may be unnormalized; they are normalized exactly on load.
  static CompositionPrior custom(int balls, const std::vector<Rational>& weights);

  Kind kind() const { return kind_; }
  int balls() const { return static_cast<int>(masses_.size()) - 1; }
  /// N+1 masses indexed by r, each >= 0, summing to exactly 1.
  const std::vector<Rational>& masses() const { return masses_; }

  int point_reds() const { return point_reds_; }       // kind() == point only
  const Rational& binomial_p() const { return binomial_p_; }  // kind() == binomial only

 private:
  CompositionPrior(Kind kind, std::vector<Rational> masses);

  Kind kind_;
  std::vector<Rational> masses_;
  int point_reds_ = -1;
  Rational binomial_p_;
};

struct UrnScenario {
  int balls;  // N
  CompositionPrior prior;

  UrnScenario(int balls, CompositionPrior prior);
};

/// P(R = r). Throws std::domain_error when r is outside 0..N.
Rational prior_mass(const UrnScenario& scenario, int reds);

/// P(exact ordered draw sequence | R = r), sampling without replacement.
/// Zero whenever the sequence demands more reds than r or more greens
/// than N - r.
Rational evidence_likelihood(const UrnScenario& scenario, int reds,
                             const Evidence& evidence);

/// Total probability of the evidence: sum over r of likelihood * prior.
Rational evidence_probability(const UrnScenario& scenario, const Evidence& evidence);

/// P(R = r | evidence) for r = 0..N, dense, summing to exactly 1.
/// Throws ConditioningError when the evidence has probability zero.
std::vector<Rational> posterior(const UrnScenario& scenario, const Evidence& evidence);

/// Predictive probability that the next draw shows `next`, given the
/// observed sequence: P(evidence ++ [next]) / P(evidence).
Rational predictive_next(const UrnScenario& scenario, const Evidence& evidence,
                         Color next);

/// The headline puzzle on an urn of size N: uniform composition prior,
/// one red observed, probability the second draw is red. Exactly 2/3
/// for every N >= 2.
Rational litt_answer(int balls);

}  // namespace urn
