#include "urn/bayesnet.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace urn::bayes {

DiscreteNetwork::DiscreteNetwork(std::vector<Variable> variables, std::vector<Cpt> cpts)
    : variables_(std::move(variables)), cpts_(std::move(cpts)) {
  if (variables_.empty()) {
    throw std::domain_error("network: no variables");
  }
  std::set<std::string> names;
  for (const Variable& var : variables_) {
    if (var.states.empty()) {
      throw std::domain_error("network: variable \"" + var.name + "\" has no states");
    }
    if (!names.insert(var.name).second) {
      throw std::domain_error("network: duplicate variable \"" + var.name + "\"");
    }
    std::set<std::string> states(var.states.begin(), var.states.end());
    if (states.size() != var.states.size()) {
      throw std::domain_error("network: duplicate state in \"" + var.name + "\"");
    }
  }
  if (cpts_.size() != variables_.size()) {
    throw std::domain_error("network: need exactly one CPT per variable");
  }
  // Reorder CPTs to align with the variable list.
  std::vector<Cpt> aligned(variables_.size());
  std::vector<bool> used(variables_.size(), false);
  for (Cpt& cpt : cpts_) {
    const std::size_t index = variable_index(cpt.child);
    if (used[index]) {
      throw std::domain_error("network: duplicate CPT for \"" + cpt.child + "\"");
    }
    used[index] = true;
    aligned[index] = std::move(cpt);
  }
  cpts_ = std::move(aligned);

  parent_index_.resize(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    std::size_t row_count = 1;
    for (const std::string& parent : cpts_[i].parents) {
      const std::size_t p = variable_index(parent);
      parent_index_[i].push_back(p);
      row_count *= variables_[p].states.size();
    }
    if (cpts_[i].rows.size() != row_count) {
      throw std::domain_error("network: CPT for \"" + variables_[i].name + "\" has " +
                              std::to_string(cpts_[i].rows.size()) + " rows, expected " +
                              std::to_string(row_count));
    }
    for (const std::vector<Rational>& row : cpts_[i].rows) {
      if (row.size() != variables_[i].states.size()) {
        throw std::domain_error("network: CPT row width mismatch for \"" +
                                variables_[i].name + "\"");
      }
      Rational total = 0;
      for (const Rational& entry : row) {
        if (entry < 0) {
          throw std::domain_error("network: negative CPT entry for \"" +
                                  variables_[i].name + "\"");
        }
        total += entry;
      }
      if (total != 1) {
        throw std::domain_error("network: CPT row for \"" + variables_[i].name +
                                "\" does not sum to 1");
      }
    }
  }

  // Acyclicity via Kahn's algorithm over the parent edges.
  std::vector<std::size_t> in_degree(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    in_degree[i] = parent_index_[i].size();
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (in_degree[i] == 0) ready.push_back(i);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const std::size_t node = ready.back();
    ready.pop_back();
    ++visited;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      for (const std::size_t parent : parent_index_[i]) {
        if (parent == node && --in_degree[i] == 0) {
          ready.push_back(i);
        }
      }
    }
  }
  if (visited != variables_.size()) {
    throw std::domain_error("network: parent references form a cycle");
  }
}

const Variable& DiscreteNetwork::variable(const std::string& name) const {
  return variables_[variable_index(name)];
}

std::size_t DiscreteNetwork::variable_index(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return i;
  }
  throw std::domain_error("network: unknown variable \"" + name + "\"");
}

std::size_t DiscreteNetwork::state_index(std::size_t variable,
                                         const std::string& state) const {
  const std::vector<std::string>& states = variables_[variable].states;
  const auto it = std::find(states.begin(), states.end(), state);
  if (it == states.end()) {
    throw std::domain_error("network: unknown state \"" + state + "\" of \"" +
                            variables_[variable].name + "\"");
  }
  return static_cast<std::size_t>(it - states.begin());
}

Rational DiscreteNetwork::joint_of(const std::vector<std::size_t>& states) const {
  Rational probability = 1;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    std::size_t row = 0;
    for (const std::size_t parent : parent_index_[i]) {
      row = row * variables_[parent].states.size() + states[parent];
    }
    probability *= cpts_[i].rows[row][states[i]];
    if (probability == 0) break;
  }
  return probability;
}

Rational DiscreteNetwork::joint_probability(const Assignment& assignment) const {
  if (assignment.size() != variables_.size()) {
    throw std::domain_error("joint_probability: assignment must cover every variable");
  }
  std::vector<std::size_t> states(variables_.size());
  for (const auto& [name, state] : assignment) {
    const std::size_t i = variable_index(name);
    states[i] = state_index(i, state);
  }
  return joint_of(states);
}

std::vector<Rational> DiscreteNetwork::query(const std::string& target,
                                             const Assignment& observations) const {
  const std::size_t target_index = variable_index(target);
  std::vector<bool> fixed(variables_.size(), false);
  std::vector<std::size_t> states(variables_.size(), 0);
  for (const auto& [name, state] : observations) {
    const std::size_t i = variable_index(name);
    if (i == target_index) {
      throw std::domain_error("query: target \"" + target + "\" is observed");
    }
    fixed[i] = true;
    states[i] = state_index(i, state);
  }

  std::vector<Rational> accumulated(variables_[target_index].states.size(), Rational(0));
  // Odometer over the free variables.
  for (;;) {
    accumulated[states[target_index]] += joint_of(states);
    std::size_t i = 0;
    for (; i < variables_.size(); ++i) {
      if (fixed[i]) continue;
      if (++states[i] < variables_[i].states.size()) break;
      states[i] = 0;
    }
    if (i == variables_.size()) break;
  }

  Rational total = 0;
  for (const Rational& mass : accumulated) total += mass;
  if (total == 0) {
    throw ConditioningError("query: observations have probability zero");
  }
  for (Rational& mass : accumulated) mass /= total;
  return accumulated;
}

DiscreteNetwork build_monty_hall() {
  const std::vector<std::string> doors = {"1", "2", "3"};
  const Rational third = make_rational(1, 3);
  const Rational half = make_rational(1, 2);

  std::vector<Cpt> cpts;
  cpts.push_back({"car", {}, {{third, third, third}}});
  cpts.push_back({"pick", {}, {{third, third, third}}});

  // host != pick, host != car, uniform over what remains.
  std::vector<std::vector<Rational>> host_rows;
  for (int car = 0; car < 3; ++car) {
    for (int pick = 0; pick < 3; ++pick) {
      std::vector<int> allowed;
      for (int host = 0; host < 3; ++host) {
        if (host != car && host != pick) allowed.push_back(host);
      }
      std::vector<Rational> row(3, Rational(0));
      for (const int host : allowed) {
        row[static_cast<std::size_t>(host)] =
            make_rational(1, static_cast<int>(allowed.size()));
      }
      host_rows.push_back(std::move(row));
    }
  }
  cpts.push_back({"host", {"car", "pick"}, std::move(host_rows)});

  return DiscreteNetwork({{"car", doors}, {"pick", doors}, {"host", doors}},
                         std::move(cpts));
}

DiscreteNetwork build_bertrand_box() {
  const Rational third = make_rational(1, 3);
  const Rational half = make_rational(1, 2);
  const Rational one = 1;
  const Rational zero = 0;

  std::vector<Cpt> cpts;
  cpts.push_back({"box", {}, {{third, third, third}}});
  // P(seen = gold | box): GG -> 1, GS -> 1/2, SS -> 0.
  cpts.push_back({"seen", {"box"}, {{one, zero}, {half, half}, {zero, one}}});
  // other_side is determined by (box, seen); rows for conflicting
  // combinations (GG/silver, SS/gold) are unreachable and carry an
  // arbitrary valid distribution.
  cpts.push_back({"other_side",
                  {"box", "seen"},
                  {
                      {one, zero},  // GG, gold  -> gold
                      {one, zero},  // GG, silver (unreachable)
                      {zero, one},  // GS, gold  -> silver
                      {one, zero},  // GS, silver -> gold
                      {zero, one},  // SS, gold  (unreachable)
                      {zero, one},  // SS, silver -> silver
                  }});

  return DiscreteNetwork({{"box", {"GG", "GS", "SS"}},
                          {"seen", {"gold", "silver"}},
                          {"other_side", {"gold", "silver"}}},
                         std::move(cpts));
}

DiscreteNetwork build_urn_network(int balls, int depth) {
  return build_urn_network(balls, depth, CompositionPrior::uniform(balls));
}

DiscreteNetwork build_urn_network(int balls, int depth, const CompositionPrior& prior) {
  if (depth < 1 || depth > 4 || depth > balls) {
    throw std::domain_error("build_urn_network: depth must be in 1..min(N, 4)");
  }
  if (prior.balls() != balls) {
    throw std::domain_error("build_urn_network: prior support does not match urn size");
  }

  std::vector<Variable> variables;
  std::vector<Cpt> cpts;

  Variable composition{"R", {}};
  for (int r = 0; r <= balls; ++r) {
    composition.states.push_back(std::to_string(r));
  }
  variables.push_back(std::move(composition));
  cpts.push_back({"R", {}, {prior.masses()}});

  const std::vector<std::string> colors = {"red", "green"};
  for (int draw = 1; draw <= depth; ++draw) {
    const std::string name = "draw" + std::to_string(draw);
    std::vector<std::string> parents = {"R"};
    for (int earlier = 1; earlier < draw; ++earlier) {
      parents.push_back("draw" + std::to_string(earlier));
    }

    // Row order: R most significant, then earlier draws in order.
    std::vector<std::vector<Rational>> rows;
    const int combos = 1 << (draw - 1);
    for (int r = 0; r <= balls; ++r) {
      for (int pattern = 0; pattern < combos; ++pattern) {
        int reds_taken = 0;
        for (int bit = 0; bit < draw - 1; ++bit) {
          // bit 0 is the earliest draw; state 0 is red.
          if (((pattern >> (draw - 2 - bit)) & 1) == 0) ++reds_taken;
        }
        const int greens_taken = (draw - 1) - reds_taken;
        const int balls_left = balls - (draw - 1);
        std::vector<Rational> row(2);
        if (reds_taken > r) {
          row = {Rational(0), Rational(1)};  // unreachable: too many reds drawn
        } else if (greens_taken > balls - r) {
          row = {Rational(1), Rational(0)};  // unreachable: too many greens drawn
        } else {
          const Rational p_red = make_rational(r - reds_taken, balls_left);
          row = {p_red, 1 - p_red};
        }
        rows.push_back(std::move(row));
      }
    }
    variables.push_back({name, colors});
    cpts.push_back({name, std::move(parents), std::move(rows)});
  }

  return DiscreteNetwork(std::move(variables), std::move(cpts));
}

}  // namespace urn::bayes
