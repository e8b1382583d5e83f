#pragma once

#include "urn/urn_model.hpp"

#include <map>
#include <string>
#include <vector>

namespace urn::bayes {

struct Variable {
  std::string name;
  std::vector<std::string> states;  // ordered, unique, nonempty
};

/// One row per combination of parent states (mixed-radix over the
/// parents in order, first parent most significant); each row is a
/// distribution over the child's states summing to exactly 1.
struct Cpt {
  std::string child;
  std::vector<std::string> parents;
  std::vector<std::vector<Rational>> rows;
};

using Assignment = std::map<std::string, std::string>;

/// Exact discrete network, queried by full-joint enumeration. Small by
/// construction; the puzzle networks top out at a few hundred
/// assignments.
class DiscreteNetwork {
 public:
  /// Validates names, acyclicity, row counts, and row normalization.
  DiscreteNetwork(std::vector<Variable> variables, std::vector<Cpt> cpts);

  const std::vector<Variable>& variables() const { return variables_; }
  const Variable& variable(const std::string& name) const;

  /// Product over variables of the CPT entry picked by the assignment.
  /// The assignment must cover every variable.
  Rational joint_probability(const Assignment& assignment) const;

  /// Exact P(target | observations) by enumeration, in the target's
  /// state order. Throws ConditioningError when the observations have
  /// probability zero.
  std::vector<Rational> query(const std::string& target,
                              const Assignment& observations) const;

 private:
  std::size_t variable_index(const std::string& name) const;
  std::size_t state_index(std::size_t variable, const std::string& state) const;
  Rational joint_of(const std::vector<std::size_t>& states) const;

  std::vector<Variable> variables_;
  std::vector<Cpt> cpts_;                       // aligned with variables_
  std::vector<std::vector<std::size_t>> parent_index_;  // aligned with variables_
};

/// Three doors: car and pick uniform and independent; the host opens a
/// door that hides a goat and is not the pick, uniformly on ties.
DiscreteNetwork build_monty_hall();

/// Three boxes GG/GS/SS; a face is shown uniformly at random and the
/// other side of the same coin is queried.
DiscreteNetwork build_bertrand_box();

/// R -> draw1 -> ... -> drawDepth with sequential draw-without-
/// replacement CPTs. Depth capped at 4 to keep the joint enumerable.
DiscreteNetwork build_urn_network(int balls, int depth);
DiscreteNetwork build_urn_network(int balls, int depth, const CompositionPrior& prior);

}  // namespace urn::bayes
