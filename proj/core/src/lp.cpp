#include "droopjr/lp.hpp"

#include <stdexcept>

namespace droopjr {
namespace {

// Dense exact-rational simplex tableau. Columns: structural variables, one
// slack per inequality, one artificial per row, then the rhs.
struct Tableau {
  int num_vars;
  int art_begin;  // first artificial column
  int cols;       // total columns excluding rhs
  std::vector<std::vector<Rational>> t;
  std::vector<int> basis;

  Tableau(int nv, const std::vector<LinearConstraint>& constraints) : num_vars(nv) {
    const int rows = static_cast<int>(constraints.size());
    int num_slacks = 0;
    for (const auto& c : constraints)
      if (c.rel != Rel::Eq) ++num_slacks;
    art_begin = num_vars + num_slacks;
    cols = art_begin + rows;

    t.assign(rows, std::vector<Rational>(cols + 1, Rational(0)));
    basis.resize(rows);
    int slack = 0;
    for (int i = 0; i < rows; ++i) {
      const auto& c = constraints[i];
      if (static_cast<int>(c.coeffs.size()) != num_vars)
        throw std::invalid_argument("lp: constraint arity mismatch");
      // Normalize to nonnegative rhs so the artificial basis is feasible.
      Rational sign = c.rhs < 0 ? Rational(-1) : Rational(1);
      for (int j = 0; j < num_vars; ++j) t[i][j] = sign * c.coeffs[j];
      if (c.rel != Rel::Eq) {
        Rational s = c.rel == Rel::LessEq ? Rational(1) : Rational(-1);
        t[i][num_vars + slack] = sign * s;
        ++slack;
      }
      t[i][art_begin + i] = 1;
      t[i][cols] = sign * c.rhs;
      basis[i] = art_begin + i;
    }
  }

  int rows() const { return static_cast<int>(t.size()); }

  void pivot(int leave, int enter) {
    Rational p = t[leave][enter];
    for (int j = 0; j <= cols; ++j) t[leave][j] /= p;
    for (int i = 0; i < rows(); ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  // Minimizes cost . x over columns < enter_limit with Bland's rule. Returns
  // the optimal objective value, or throws if unbounded below.
  Rational minimize(const std::vector<Rational>& cost, int enter_limit) {
    std::vector<Rational> reduced(cost.begin(), cost.begin() + enter_limit);
    Rational objective = 0;
    for (int i = 0; i < rows(); ++i) {
      if (cost[basis[i]] == 0) continue;
      for (int j = 0; j < enter_limit; ++j) reduced[j] -= cost[basis[i]] * t[i][j];
      objective += cost[basis[i]] * t[i][cols];
    }

    while (true) {
      int enter = -1;  // Bland: lowest column with negative reduced cost
      for (int j = 0; j < enter_limit; ++j)
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return objective;

      int leave = -1;
      Rational best_ratio = 0;
      for (int i = 0; i < rows(); ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][cols] / t[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) throw std::logic_error("lp: objective unbounded");

      pivot(leave, enter);
      // entering by theta = new rhs of the pivot row moves the objective by
      // reduced[enter] * theta
      Rational rf = reduced[enter];
      for (int j = 0; j < enter_limit; ++j) reduced[j] -= rf * t[leave][j];
      objective += rf * t[leave][cols];
    }
  }

  // Runs phase 1 (minimize the artificial mass); true iff feasible. On
  // success, drives leftover zero-level artificials out of the basis so phase
  // 2 pivots can never re-inflate them; all-zero rows are redundant and drop.
  bool phase1() {
    std::vector<Rational> cost(cols, Rational(0));
    for (int j = art_begin; j < cols; ++j) cost[j] = 1;
    if (minimize(cost, cols) != 0) return false;

    for (int i = rows() - 1; i >= 0; --i) {
      if (basis[i] < art_begin) continue;
      int enter = -1;
      for (int j = 0; j < art_begin; ++j)
        if (t[i][j] != 0) {
          enter = j;
          break;
        }
      if (enter >= 0) {
        pivot(i, enter);
      } else {
        t.erase(t.begin() + i);
        basis.erase(basis.begin() + i);
      }
    }
    return true;
  }

  std::vector<Rational> point() const {
    std::vector<Rational> x(num_vars, Rational(0));
    for (int i = 0; i < rows(); ++i)
      if (basis[i] < num_vars) x[basis[i]] = t[i][cols];
    return x;
  }
};

}  // namespace

std::optional<std::vector<Rational>> lp_feasible_point(
    int num_vars, const std::vector<LinearConstraint>& constraints) {
  Tableau tab(num_vars, constraints);
  if (!tab.phase1()) return std::nullopt;
  return tab.point();
}

std::optional<std::pair<Rational, std::vector<Rational>>> lp_maximize(
    int num_vars, const std::vector<LinearConstraint>& constraints,
    const std::vector<Rational>& objective) {
  if (static_cast<int>(objective.size()) != num_vars)
    throw std::invalid_argument("lp: objective arity mismatch");
  Tableau tab(num_vars, constraints);
  if (!tab.phase1()) return std::nullopt;
  std::vector<Rational> cost(tab.cols, Rational(0));
  for (int j = 0; j < num_vars; ++j) cost[j] = -objective[j];
  Rational value = -tab.minimize(cost, tab.art_begin);
  return std::make_pair(value, tab.point());
}

}  // namespace droopjr
