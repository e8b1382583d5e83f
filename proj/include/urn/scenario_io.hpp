#pragma once

#include "urn/urn_model.hpp"

#include <stdexcept>
#include <string>

namespace urn {

/// Malformed scenario syntax; message carries the parser's location.
struct ScenarioParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed but invalid scenario; `field` names the offending entry.
struct ScenarioValidationError : std::runtime_error {
  ScenarioValidationError(const std::string& field_in, const std::string& message)
      : std::runtime_error("field \"" + field_in + "\": " + message), field(field_in) {}
  std::string field;
};

struct QuerySpec {
  enum class Type { next, posterior };
  Type type = Type::next;
  Color color = Color::red;  // next-color queries only
};

/// A parsed scenario file: urn size, composition prior, observed draws,
/// and the question to answer. Defaults reproduce the 100-ball puzzle
/// with one red draw observed.
struct ScenarioDocument {
  int balls = 100;
  CompositionPrior prior = CompositionPrior::uniform(100);
  Evidence evidence = {Color::red};
  QuerySpec query;

  UrnScenario scenario() const { return UrnScenario(balls, prior); }
};

ScenarioDocument default_scenario_document();

/// Parses the JSON scenario format. Omitted fields take the defaults
/// above. Rational fields accept "p/q" strings, plain integer strings,
/// and JSON integers. Custom prior weights may be unnormalized.
ScenarioDocument parse_scenario(const std::string& text);

/// Canonical JSON for a document; re-parses to an identical document.
std::string emit_scenario(const ScenarioDocument& document);

}  // namespace urn
