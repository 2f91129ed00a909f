#pragma once

// Exact feasibility of small integer programs with bounded variables.
//
// Depth-first branch and bound: bound propagation at every node, then an
// exact LP relaxation (bounded-variable phase-one simplex, Bland's rule).
// An integral relaxation point ends the search. Exponential in the worst
// case; meant for a few hundred variables at most.

#include <optional>
#include <string>
#include <vector>

#include "swapbribery/rational.hpp"

namespace swapbribery {

enum class Relation { le, ge, eq };

struct LinearConstraint {
  /// (variable, coefficient) pairs; a variable may appear at most once.
  std::vector<std::pair<int, Rational>> terms;
  Relation relation = Relation::le;
  Rational rhs;
  std::string label;
};

/// Integer variables with 0 <= lower <= x <= upper.
struct IntegerProgram {
  std::vector<std::string> names;
  std::vector<long long> lower;
  std::vector<long long> upper;
  std::vector<LinearConstraint> constraints;

  int variable_count() const { return static_cast<int>(names.size()); }
  int add_variable(std::string name, long long lo, long long hi);
  void add_constraint(LinearConstraint c) { constraints.push_back(std::move(c)); }
};

struct IlpOptions {
  int variable_cap = 2000;
  long long node_cap = 1000000;
  /// Skip the LP relaxation and rely on propagation alone.
  bool use_relaxation = true;
};

struct IlpResult {
  bool feasible = false;
  std::vector<long long> values;
  long long nodes = 0;
};

/// Throws ResourceError past the variable or node cap, DomainError on a
/// malformed program.
IlpResult ilp_feasible(const IntegerProgram& program, const IlpOptions& options = {});

/// Exact check of bounds and every constraint.
bool satisfies(const IntegerProgram& program, const std::vector<long long>& values);

/// LP-format listing (objective 0, constraints, bounds, integrality).
std::string to_lp_text(const IntegerProgram& program, const std::vector<std::string>& comments = {});

/// Feasible point of the LP relaxation within the given bounds, or nullopt.
/// Exposed for testing.
std::optional<std::vector<Rational>> lp_feasible_point(const IntegerProgram& program,
                                                       const std::vector<long long>& lower,
                                                       const std::vector<long long>& upper);

}  // namespace swapbribery
