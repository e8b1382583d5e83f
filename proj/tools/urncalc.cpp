#include "urn/bayesnet.hpp"
#include "urn/scenario_io.hpp"
#include "urn/simulator.hpp"
#include "urn/urn_model.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string verdict_for(const urn::Rational& p_red) {
  if (p_red > urn::make_rational(1, 2)) return "more likely red";
  if (p_red < urn::make_rational(1, 2)) return "more likely green";
  return "equally likely";
}

struct Options {
  std::string format = "text";
  bool emit_scenario = false;
};

bool json_mode(const Options& options) { return options.format == "json-lines"; }

urn::ScenarioDocument load_scenario(const std::string& file) {
  if (file.empty()) {
    return urn::default_scenario_document();
  }
  std::string text;
  if (file == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream in(file);
    if (!in) {
      throw urn::ScenarioParseError("cannot open scenario file \"" + file + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  return urn::parse_scenario(text);
}

// Returns true when --emit-scenario consumed the command.
bool maybe_emit(const Options& options, const urn::ScenarioDocument& document) {
  if (!options.emit_scenario) return false;
  std::cout << urn::emit_scenario(document) << "\n";
  return true;
}

void print_rational_result(const Options& options, const std::string& command,
                           const urn::Rational& value, const std::string& verdict) {
  if (json_mode(options)) {
    json record = {{"command", command},
                   {"value", urn::to_fraction_string(value)},
                   {"decimal", urn::to_decimal_string(value)}};
    if (!verdict.empty()) record["verdict"] = verdict;
    std::cout << record.dump() << "\n";
    return;
  }
  std::cout << "exact: " << urn::to_fraction_string(value) << "\n";
  std::cout << "decimal: " << urn::to_decimal_string(value) << "\n";
  if (!verdict.empty()) std::cout << "verdict: " << verdict << "\n";
}

int run_exact(const Options& options, const std::string& file) {
  const urn::ScenarioDocument document = load_scenario(file);
  if (maybe_emit(options, document)) return 0;
  const urn::UrnScenario scenario = document.scenario();
  const urn::Color color = document.query.type == urn::QuerySpec::Type::next
                               ? document.query.color
                               : urn::Color::red;
  const urn::Rational value = urn::predictive_next(scenario, document.evidence, color);
  const urn::Rational p_red =
      color == urn::Color::red ? value : urn::Rational(1) - value;
  if (!json_mode(options)) {
    std::cout << "query: next " << urn::color_name(color) << "\n";
  }
  print_rational_result(options, "exact", value, verdict_for(p_red));
  return 0;
}

int run_posterior(const Options& options, const std::string& file) {
  const urn::ScenarioDocument document = load_scenario(file);
  if (maybe_emit(options, document)) return 0;
  const urn::UrnScenario scenario = document.scenario();
  const std::vector<urn::Rational> masses =
      urn::posterior(scenario, document.evidence);
  if (json_mode(options)) {
    json list = json::array();
    for (const urn::Rational& mass : masses) {
      list.push_back(urn::to_fraction_string(mass));
    }
    std::cout << json{{"command", "posterior"}, {"masses", std::move(list)}}.dump()
              << "\n";
    return 0;
  }
  for (std::size_t r = 0; r < masses.size(); ++r) {
    std::cout << "r=" << r << " " << urn::to_fraction_string(masses[r]) << " "
              << urn::to_decimal_string(masses[r]) << "\n";
  }
  return 0;
}

int run_simulate(const Options& options, const std::string& file,
                 const urn::SimConfig& config) {
  const urn::ScenarioDocument document = load_scenario(file);
  if (maybe_emit(options, document)) return 0;
  if (document.query.type != urn::QuerySpec::Type::next) {
    throw urn::ScenarioValidationError("query.type", "simulate needs a next-color query");
  }
  const urn::UrnScenario scenario = document.scenario();
  const urn::SimResult result =
      urn::simulate_predictive(scenario, document.evidence, document.query.color, config);
  const auto [lo, hi] = urn::confidence_interval(result, 3.0);
  if (json_mode(options)) {
    std::cout << json{{"command", "simulate"},
                      {"accepted", result.accepted},
                      {"successes", result.successes},
                      {"attempts", result.attempts},
                      {"estimate", format_double(result.estimate)},
                      {"std_error", format_double(result.std_error)},
                      {"ci_z3_lo", format_double(lo)},
                      {"ci_z3_hi", format_double(hi)}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << "accepted: " << result.accepted << "\n";
  std::cout << "successes: " << result.successes << "\n";
  std::cout << "attempts: " << result.attempts << "\n";
  std::cout << "estimate: " << format_double(result.estimate) << "\n";
  std::cout << "std_error: " << format_double(result.std_error) << "\n";
  std::cout << "ci_z3: [" << format_double(lo) << ", " << format_double(hi) << "]\n";
  return 0;
}

int run_puzzle(const Options& options, const std::string& which, int balls) {
  if (which == "monty-hall") {
    const urn::bayes::DiscreteNetwork net = urn::bayes::build_monty_hall();
    // Pick door 1, host opens door 3; switching means door 2.
    const std::vector<urn::Rational> car =
        net.query("car", {{"pick", "1"}, {"host", "3"}});
    if (!json_mode(options)) std::cout << "puzzle: monty-hall (switch wins)\n";
    print_rational_result(options, "puzzle monty-hall", car[1], "");
    return 0;
  }
  if (which == "bertrand-box") {
    const urn::bayes::DiscreteNetwork net = urn::bayes::build_bertrand_box();
    const std::vector<urn::Rational> other =
        net.query("other_side", {{"seen", "gold"}});
    if (!json_mode(options)) std::cout << "puzzle: bertrand-box (other side gold)\n";
    print_rational_result(options, "puzzle bertrand-box", other[0], "");
    return 0;
  }
  if (which == "litt") {
    const urn::Rational value = urn::litt_answer(balls);
    if (!json_mode(options)) {
      std::cout << "puzzle: litt (balls=" << balls << ", second draw red)\n";
    }
    print_rational_result(options, "puzzle litt", value, verdict_for(value));
    return 0;
  }
  throw std::domain_error("unknown puzzle \"" + which + "\"");
}

int run_crosscheck(const Options& options, const std::string& file, int depth_option) {
  const urn::ScenarioDocument document = load_scenario(file);
  if (maybe_emit(options, document)) return 0;
  const urn::UrnScenario scenario = document.scenario();
  const int k = static_cast<int>(document.evidence.size());
  const int depth = depth_option > 0 ? depth_option : k + 1;
  if (depth < k + 1) {
    throw std::domain_error("crosscheck: depth must cover the evidence plus one draw");
  }
  const urn::Color color = document.query.type == urn::QuerySpec::Type::next
                               ? document.query.color
                               : urn::Color::red;

  const urn::Rational urn_predictive =
      urn::predictive_next(scenario, document.evidence, color);
  const std::vector<urn::Rational> urn_posterior =
      urn::posterior(scenario, document.evidence);

  const urn::bayes::DiscreteNetwork net =
      urn::bayes::build_urn_network(scenario.balls, depth, scenario.prior);
  urn::bayes::Assignment observations;
  for (int i = 0; i < k; ++i) {
    observations["draw" + std::to_string(i + 1)] =
        std::string(urn::color_name(document.evidence[static_cast<std::size_t>(i)]));
  }
  const std::vector<urn::Rational> next_draw =
      net.query("draw" + std::to_string(k + 1), observations);
  const urn::Rational net_predictive =
      next_draw[color == urn::Color::red ? 0 : 1];
  const std::vector<urn::Rational> net_posterior = net.query("R", observations);

  const bool predictive_agrees = urn_predictive == net_predictive;
  const bool posterior_agrees = urn_posterior == net_posterior;
  const bool agrees = predictive_agrees && posterior_agrees;

  if (json_mode(options)) {
    std::cout << json{{"command", "crosscheck"},
                      {"predictive_urn", urn::to_fraction_string(urn_predictive)},
                      {"predictive_bayesnet", urn::to_fraction_string(net_predictive)},
                      {"posterior_agrees", posterior_agrees},
                      {"result", agrees ? "AGREE" : "DISAGREE"}}
                     .dump()
              << "\n";
  } else {
    std::cout << "predictive (" << urn::color_name(color)
              << ") urn-model: " << urn::to_fraction_string(urn_predictive) << "\n";
    std::cout << "predictive (" << urn::color_name(color)
              << ") bayesnet:  " << urn::to_fraction_string(net_predictive) << "\n";
    std::cout << "posterior over R: " << (posterior_agrees ? "match" : "MISMATCH")
              << "\n";
    std::cout << "result: " << (agrees ? "AGREE" : "DISAGREE") << "\n";
  }
  return agrees ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact conditional-probability engine for urn puzzles"};
  app.require_subcommand(1);

  Options options;
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();
  app.add_flag("--emit-scenario", options.emit_scenario,
               "Print the parsed, normalized scenario instead of running");

  std::string exact_file;
  CLI::App* exact = app.add_subcommand("exact", "Exact predictive probability");
  exact->add_option("FILE", exact_file, "Scenario file, - for stdin");

  std::string simulate_file;
  urn::SimConfig config;
  config.trials = 1000000;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo verification");
  simulate->add_option("FILE", simulate_file, "Scenario file, - for stdin");
  simulate->add_option("--trials", config.trials, "Accepted-trial target")
      ->capture_default_str();
  simulate->add_option("--seed", config.seed, "RNG seed")->capture_default_str();
  simulate->add_option("--chunk-size", config.chunk_size, "Accepted trials per substream")
      ->capture_default_str();
  simulate->add_option("--max-attempts", config.max_attempts,
                       "Rejection cap (0: 1000x trials)");
  simulate->add_option("--threads", config.threads, "Worker threads (0: auto)");

  std::string posterior_file;
  CLI::App* posterior = app.add_subcommand("posterior", "Posterior over the composition");
  posterior->add_option("FILE", posterior_file, "Scenario file, - for stdin");

  std::string puzzle_name;
  int puzzle_balls = 100;
  CLI::App* puzzle = app.add_subcommand("puzzle", "Solve a classic puzzle");
  puzzle->add_option("NAME", puzzle_name, "monty-hall, bertrand-box, or litt")
      ->required()
      ->check(CLI::IsMember({"monty-hall", "bertrand-box", "litt"}));
  puzzle->add_option("--balls", puzzle_balls, "Urn size for the litt puzzle")
      ->capture_default_str();

  std::string crosscheck_file;
  int crosscheck_depth = 0;
  CLI::App* crosscheck =
      app.add_subcommand("crosscheck", "Compare urn-model and bayesnet answers");
  crosscheck->add_option("FILE", crosscheck_file, "Scenario file, - for stdin");
  crosscheck->add_option("--depth", crosscheck_depth, "Draw depth of the network (1..4)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (exact->parsed()) return run_exact(options, exact_file);
    if (simulate->parsed()) return run_simulate(options, simulate_file, config);
    if (posterior->parsed()) return run_posterior(options, posterior_file);
    if (puzzle->parsed()) return run_puzzle(options, puzzle_name, puzzle_balls);
    if (crosscheck->parsed()) return run_crosscheck(options, crosscheck_file, crosscheck_depth);
  } catch (const urn::ConditioningError& error) {
    std::cerr << "error: conditioning: " << error.what() << "\n";
    return 1;
  } catch (const urn::SaturationError& error) {
    std::cerr << "error: saturation: " << error.what() << "\n";
    return 1;
  } catch (const urn::ScenarioParseError& error) {
    std::cerr << "error: parse: " << error.what() << "\n";
    return 1;
  } catch (const urn::ScenarioValidationError& error) {
    std::cerr << "error: validation: " << error.what() << "\n";
    return 1;
  } catch (const std::domain_error& error) {
    std::cerr << "error: domain: " << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: internal: " << error.what() << "\n";
    return 1;
  }
  return 1;
}
