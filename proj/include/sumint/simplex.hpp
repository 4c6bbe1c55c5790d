#pragma once

#include <vector>

#include "sumint/rational.hpp"

namespace sumint {

/// Equality-form LP:  minimize cost . y  subject to  A y = rhs, y >= 0.
/// A is stored column-major (one vector of `rows` entries per variable) since
/// the intended use has few rows and many columns.
struct StandardFormLp {
  std::size_t rows = 0;
  std::vector<std::vector<Rational>> columns;
  std::vector<Rational> rhs;
  std::vector<Rational> cost;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> primal;  // y, one entry per column
  /// Simplex multipliers of the final basis: cost_j - pi . A_j >= 0 for every
  /// column and pi . rhs = objective.
  std::vector<Rational> duals;
  std::size_t pivots = 0;
};

/// Two-phase revised simplex in exact arithmetic with an explicit basis
/// inverse. Bland's rule for both entering and leaving choices, so the pivot
/// sequence is deterministic and cannot cycle.
LpSolution solve_standard_form(const StandardFormLp& lp);

}  // namespace sumint
