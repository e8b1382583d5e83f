#include "urn/urn_model.hpp"

#include <string>
#include <utility>

namespace urn {

Color complement(Color color) {
  return color == Color::red ? Color::green : Color::red;
}

std::string_view color_name(Color color) {
  return color == Color::red ? "red" : "green";
}

Color parse_color(std::string_view name) {
  if (name == "red") return Color::red;
  if (name == "green") return Color::green;
  throw std::invalid_argument("unknown color \"" + std::string(name) + "\"");
}

namespace {

void check_balls(int balls) {
  if (balls < 1 || balls > kMaxBalls) {
    throw std::domain_error("urn size must be in 1.." + std::to_string(kMaxBalls) +
                            ", got " + std::to_string(balls));
  }
}

}  // namespace

CompositionPrior::CompositionPrior(Kind kind, std::vector<Rational> masses)
    : kind_(kind), masses_(std::move(masses)) {
  Rational total = 0;
  for (const Rational& mass : masses_) {
    if (mass < 0) {
      throw std::domain_error("prior mass must be nonnegative");
    }
    total += mass;
  }
  if (total != 1) {
    throw std::domain_error("prior masses must sum to exactly 1");
  }
}

CompositionPrior CompositionPrior::uniform(int balls) {
  check_balls(balls);
  std::vector<Rational> masses(static_cast<std::size_t>(balls) + 1,
                               make_rational(1, balls + 1));
  return CompositionPrior(Kind::uniform, std::move(masses));
}

CompositionPrior CompositionPrior::point(int balls, int reds) {
  check_balls(balls);
  if (reds < 0 || reds > balls) {
    throw std::domain_error("point prior: reds must be in 0..N");
  }
  std::vector<Rational> masses(static_cast<std::size_t>(balls) + 1, Rational(0));
  masses[static_cast<std::size_t>(reds)] = 1;
  CompositionPrior prior(Kind::point, std::move(masses));
  prior.point_reds_ = reds;
  return prior;
}

CompositionPrior CompositionPrior::binomial(int balls, const Rational& p) {
  check_balls(balls);
  if (p < 0 || p > 1) {
    throw std::domain_error("binomial prior: p must be in [0, 1]");
  }
  // mass(r) = C(N,r) a^r (d-a)^(N-r) / d^N for p = a/d.
  const Int a = numerator(p);
  const Int d = denominator(p);
  const Int b = d - a;
  std::vector<Rational> masses;
  masses.reserve(static_cast<std::size_t>(balls) + 1);
  Int denom = pow(d, static_cast<unsigned>(balls));
  for (int r = 0; r <= balls; ++r) {
    const Int num = binomial_coefficient(balls, r) *
                    pow(a, static_cast<unsigned>(r)) *
                    pow(b, static_cast<unsigned>(balls - r));
    masses.push_back(make_rational(num, denom));
  }
  CompositionPrior prior(Kind::binomial, std::move(masses));
  prior.binomial_p_ = p;
  return prior;
}

CompositionPrior CompositionPrior::custom(int balls, const std::vector<Rational>& weights) {
  check_balls(balls);
  if (weights.size() != static_cast<std::size_t>(balls) + 1) {
    throw std::domain_error("custom prior: need exactly N+1 weights, got " +
                            std::to_string(weights.size()));
  }
  Rational total = 0;
  for (const Rational& w : weights) {
    if (w < 0) {
      throw std::domain_error("custom prior: weights must be nonnegative");
    }
    total += w;
  }
  if (total == 0) {
    throw std::domain_error("custom prior: all weights are zero");
  }
  std::vector<Rational> masses;
  masses.reserve(weights.size());
  for (const Rational& w : weights) {
    masses.push_back(w / total);
  }
  return CompositionPrior(Kind::custom, std::move(masses));
}

UrnScenario::UrnScenario(int balls_in, CompositionPrior prior_in)
    : balls(balls_in), prior(std::move(prior_in)) {
  check_balls(balls);
  if (prior.balls() != balls) {
    throw std::domain_error("prior support does not match urn size");
  }
}

Rational prior_mass(const UrnScenario& scenario, int reds) {
  if (reds < 0 || reds > scenario.balls) {
    throw std::domain_error("prior_mass: r out of range");
  }
  return scenario.prior.masses()[static_cast<std::size_t>(reds)];
}

Rational evidence_likelihood(const UrnScenario& scenario, int reds,
                             const Evidence& evidence) {
  if (reds < 0 || reds > scenario.balls) {
    throw std::domain_error("evidence_likelihood: r out of range");
  }
  if (evidence.size() > static_cast<std::size_t>(scenario.balls)) {
    throw std::domain_error("evidence longer than the urn");
  }
  // Sequential product r/N * (r-1)/(N-1) * ..., one factor per draw.
  Int reds_left = reds;
  Int greens_left = scenario.balls - reds;
  Int balls_left = scenario.balls;
  Rational probability = 1;
  for (const Color draw : evidence) {
    Int& matching = (draw == Color::red) ? reds_left : greens_left;
    if (matching == 0) {
      return Rational(0);
    }
    probability *= make_rational(matching, balls_left);
    --matching;
    --balls_left;
  }
  return probability;
}

Rational evidence_probability(const UrnScenario& scenario, const Evidence& evidence) {
  if (evidence.size() > static_cast<std::size_t>(scenario.balls)) {
    throw std::domain_error("evidence longer than the urn");
  }
  Rational total = 0;
  for (int r = 0; r <= scenario.balls; ++r) {
    const Rational mass = prior_mass(scenario, r);
    if (mass == 0) continue;
    total += evidence_likelihood(scenario, r, evidence) * mass;
  }
  return total;
}

std::vector<Rational> posterior(const UrnScenario& scenario, const Evidence& evidence) {
  const Rational total = evidence_probability(scenario, evidence);
  if (total == 0) {
    throw ConditioningError("posterior: evidence has probability zero");
  }
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(scenario.balls) + 1);
  for (int r = 0; r <= scenario.balls; ++r) {
    out.push_back(evidence_likelihood(scenario, r, evidence) * prior_mass(scenario, r) /
                  total);
  }
  return out;
}

Rational predictive_next(const UrnScenario& scenario, const Evidence& evidence,
                         Color next) {
  if (evidence.size() + 1 > static_cast<std::size_t>(scenario.balls)) {
    throw std::domain_error("predictive_next: urn exhausted");
  }
  const Rational seen = evidence_probability(scenario, evidence);
  if (seen == 0) {
    throw ConditioningError("predictive_next: evidence has probability zero");
  }
  Evidence extended = evidence;
  extended.push_back(next);
  return evidence_probability(scenario, extended) / seen;
}

Rational litt_answer(int balls) {
  if (balls < 2) {
    throw std::domain_error("litt_answer: need at least two balls");
  }
  const UrnScenario scenario(balls, CompositionPrior::uniform(balls));
  return predictive_next(scenario, {Color::red}, Color::red);
}

}  // namespace urn
