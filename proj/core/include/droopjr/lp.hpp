#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "droopjr/rational.hpp"

namespace droopjr {

enum class Rel { LessEq, Eq, GreaterEq };

struct LinearConstraint {
  std::vector<Rational> coeffs;  // one per variable
  Rel rel;
  Rational rhs;
};

// Decides feasibility of { x >= 0 : constraints hold } with an exact rational
// phase-1 simplex under Bland's rule, and returns a feasible point when one
// exists. Exact arithmetic throughout; the search cannot cycle.
std::optional<std::vector<Rational>> lp_feasible_point(
    int num_vars, const std::vector<LinearConstraint>& constraints);

// Maximizes objective . x over the same region. Returns nullopt when
// infeasible; throws std::logic_error when the optimum is unbounded.
std::optional<std::pair<Rational, std::vector<Rational>>> lp_maximize(
    int num_vars, const std::vector<LinearConstraint>& constraints,
    const std::vector<Rational>& objective);

}  // namespace droopjr
