#include "urn/scenario_io.hpp"

#include <json.hpp>

#include <utility>

namespace urn {

namespace {

using nlohmann::json;

Rational read_rational(const json& value, const std::string& field) {
  try {
    if (value.is_number_integer()) {
      return Rational(value.get<long long>());
    }
    if (value.is_string()) {
      return parse_rational(value.get<std::string>());
    }
  } catch (const std::invalid_argument& error) {
    throw ScenarioValidationError(field, error.what());
  }
  throw ScenarioValidationError(field, "expected an integer or a \"p/q\" string");
}

int read_int(const json& value, const std::string& field) {
  if (!value.is_number_integer()) {
    throw ScenarioValidationError(field, "expected an integer");
  }
  return value.get<int>();
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const std::string& prefix) {
  for (const auto& [key, unused] : object.items()) {
    bool found = false;
    for (const char* name : known) {
      if (key == name) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw ScenarioValidationError(prefix + key, "unknown field");
    }
  }
}

CompositionPrior read_prior(const json& spec, int balls) {
  if (!spec.is_object()) {
    throw ScenarioValidationError("prior", "expected an object");
  }
  reject_unknown_keys(spec, {"type", "r", "p", "weights"}, "prior.");
  const std::string type = spec.value("type", std::string("uniform"));
  try {
    if (type == "uniform") {
      return CompositionPrior::uniform(balls);
    }
    if (type == "point") {
      if (!spec.contains("r")) {
        throw ScenarioValidationError("prior.r", "required for a point prior");
      }
      return CompositionPrior::point(balls, read_int(spec.at("r"), "prior.r"));
    }
    if (type == "binomial") {
      if (!spec.contains("p")) {
        throw ScenarioValidationError("prior.p", "required for a binomial prior");
      }
      return CompositionPrior::binomial(balls, read_rational(spec.at("p"), "prior.p"));
    }
    if (type == "custom") {
      if (!spec.contains("weights") || !spec.at("weights").is_array()) {
        throw ScenarioValidationError("prior.weights", "required array for a custom prior");
      }
      std::vector<Rational> weights;
      std::size_t i = 0;
      for (const json& entry : spec.at("weights")) {
        weights.push_back(
            read_rational(entry, "prior.weights[" + std::to_string(i) + "]"));
        ++i;
      }
      return CompositionPrior::custom(balls, weights);
    }
  } catch (const std::domain_error& error) {
    throw ScenarioValidationError("prior", error.what());
  }
  throw ScenarioValidationError("prior.type", "unknown prior type \"" + type + "\"");
}

}  // namespace

ScenarioDocument default_scenario_document() { return ScenarioDocument{}; }

ScenarioDocument parse_scenario(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& error) {
    throw ScenarioParseError(error.what());
  }
  if (!root.is_object()) {
    throw ScenarioValidationError("(document)", "expected a JSON object");
  }
  reject_unknown_keys(root, {"balls", "prior", "evidence", "query"}, "");

  ScenarioDocument document;
  document.balls = root.contains("balls") ? read_int(root.at("balls"), "balls") : 100;
  if (document.balls < 1 || document.balls > kMaxBalls) {
    throw ScenarioValidationError("balls", "must be in 1.." + std::to_string(kMaxBalls));
  }

  document.prior = root.contains("prior")
                       ? read_prior(root.at("prior"), document.balls)
                       : CompositionPrior::uniform(document.balls);

  if (root.contains("evidence")) {
    if (!root.at("evidence").is_array()) {
      throw ScenarioValidationError("evidence", "expected an array of colors");
    }
    document.evidence.clear();
    std::size_t i = 0;
    for (const json& entry : root.at("evidence")) {
      const std::string field = "evidence[" + std::to_string(i) + "]";
      if (!entry.is_string()) {
        throw ScenarioValidationError(field, "expected \"red\" or \"green\"");
      }
      try {
        document.evidence.push_back(parse_color(entry.get<std::string>()));
      } catch (const std::invalid_argument& error) {
        throw ScenarioValidationError(field, error.what());
      }
      ++i;
    }
  }
  if (document.evidence.size() > static_cast<std::size_t>(document.balls)) {
    throw ScenarioValidationError("evidence", "longer than the urn");
  }

  if (root.contains("query")) {
    const json& query = root.at("query");
    if (!query.is_object()) {
      throw ScenarioValidationError("query", "expected an object");
    }
    reject_unknown_keys(query, {"type", "color"}, "query.");
    const std::string type = query.value("type", std::string("next"));
    if (type == "next") {
      document.query.type = QuerySpec::Type::next;
      if (query.contains("color")) {
        if (!query.at("color").is_string()) {
          throw ScenarioValidationError("query.color", "expected \"red\" or \"green\"");
        }
        try {
          document.query.color = parse_color(query.at("color").get<std::string>());
        } catch (const std::invalid_argument& error) {
          throw ScenarioValidationError("query.color", error.what());
        }
      }
    } else if (type == "posterior") {
      document.query.type = QuerySpec::Type::posterior;
      if (query.contains("color")) {
        throw ScenarioValidationError("query.color", "not allowed for a posterior query");
      }
    } else {
      throw ScenarioValidationError("query.type", "unknown query type \"" + type + "\"");
    }
  }
  return document;
}

std::string emit_scenario(const ScenarioDocument& document) {
  json prior;
  switch (document.prior.kind()) {
    case CompositionPrior::Kind::uniform:
      prior = {{"type", "uniform"}};
      break;
    case CompositionPrior::Kind::point:
      prior = {{"type", "point"}, {"r", document.prior.point_reds()}};
      break;
    case CompositionPrior::Kind::binomial:
      prior = {{"type", "binomial"},
               {"p", to_fraction_string(document.prior.binomial_p())}};
      break;
    case CompositionPrior::Kind::custom: {
      json weights = json::array();
      for (const Rational& mass : document.prior.masses()) {
        weights.push_back(to_fraction_string(mass));
      }
      prior = {{"type", "custom"}, {"weights", std::move(weights)}};
      break;
    }
  }

  json evidence = json::array();
  for (const Color draw : document.evidence) {
    evidence.push_back(std::string(color_name(draw)));
  }

  json query;
  if (document.query.type == QuerySpec::Type::next) {
    query = {{"type", "next"}, {"color", std::string(color_name(document.query.color))}};
  } else {
    query = {{"type", "posterior"}};
  }

  const json root = {{"balls", document.balls},
                     {"prior", std::move(prior)},
                     {"evidence", std::move(evidence)},
                     {"query", std::move(query)}};
  return root.dump();
}

}  // namespace urn
