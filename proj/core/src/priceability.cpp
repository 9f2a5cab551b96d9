#include "droopjr/priceability.hpp"

#include <sstream>
#include <stdexcept>

#include "droopjr/lp.hpp"

namespace droopjr {

std::string PriceSystem::serialize() const {
  std::ostringstream out;
  out << "price " << to_string(price) << "\n";
  for (size_t i = 0; i < payments.size(); ++i) {
    out << "pay " << i;
    for (size_t c = 0; c < payments[i].size(); ++c)
      if (payments[i][c] != 0) out << " " << c << ":" << to_string(payments[i][c]);
    out << "\n";
  }
  return out.str();
}

std::optional<PriceSystem> find_price_system(const Election& e,
                                             const std::vector<int>& committee) {
  if (committee.empty()) throw std::invalid_argument("find_price_system: empty committee");
  const int n = e.n();
  const int m = e.m();
  std::vector<bool> in_w(m, false);
  for (int c : committee) in_w[c] = true;

  // Variable 0 is the price; then one payment variable per (voter, approved
  // committee member) pair. Nonnegativity is implicit in the LP domain.
  std::vector<std::vector<int>> var(n, std::vector<int>(m, -1));
  int num_vars = 1;
  for (int i = 0; i < n; ++i)
    for (int c : committee)
      if (e.ballot(i).test(c)) var[i][c] = num_vars++;

  std::vector<LinearConstraint> cons;
  auto zero_row = [&] { return std::vector<Rational>(num_vars, Rational(0)); };

  // Each seat collects exactly p from its approvers.
  for (int c : committee) {
    LinearConstraint lc{zero_row(), Rel::Eq, Rational(0)};
    lc.coeffs[0] = -1;
    for (int i = 0; i < n; ++i)
      if (var[i][c] >= 0) lc.coeffs[var[i][c]] = 1;
    cons.push_back(std::move(lc));
  }
  // Unit budgets.
  for (int i = 0; i < n; ++i) {
    LinearConstraint lc{zero_row(), Rel::LessEq, Rational(1)};
    bool any = false;
    for (int c : committee)
      if (var[i][c] >= 0) {
        lc.coeffs[var[i][c]] = 1;
        any = true;
      }
    if (any) cons.push_back(std::move(lc));
  }
  // Leftover rule: |N_c| - sum of total spend of c's supporters <= p.
  for (int c = 0; c < m; ++c) {
    if (in_w[c]) continue;
    auto approvers = e.approvers(c);
    if (approvers.empty()) continue;
    LinearConstraint lc{zero_row(), Rel::LessEq,
                        Rational(-static_cast<long long>(approvers.size()))};
    lc.coeffs[0] = -1;
    for (int i : approvers)
      for (int cw : committee)
        if (var[i][cw] >= 0) lc.coeffs[var[i][cw]] -= 1;
    cons.push_back(std::move(lc));
  }

  std::vector<Rational> objective(num_vars, Rational(0));
  objective[0] = 1;
  auto opt = lp_maximize(num_vars, cons, objective);
  if (!opt || opt->first <= 0) return std::nullopt;

  PriceSystem ps;
  ps.price = opt->second[0];
  ps.payments.assign(n, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int c : committee)
      if (var[i][c] >= 0) ps.payments[i][c] = opt->second[var[i][c]];
  return ps;
}

bool verify_price_system(const Election& e, const std::vector<int>& committee,
                         const PriceSystem& ps) {
  const int n = e.n();
  const int m = e.m();
  if (ps.price <= 0) return false;
  if (static_cast<int>(ps.payments.size()) != n) return false;
  std::vector<bool> in_w(m, false);
  for (int c : committee) in_w[c] = true;

  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(ps.payments[i].size()) != m) return false;
    Rational total = 0;
    for (int c = 0; c < m; ++c) {
      const Rational& x = ps.payments[i][c];
      if (x < 0) return false;
      if (x != 0 && (!e.ballot(i).test(c) || !in_w[c])) return false;
      total += x;
    }
    if (total > 1) return false;
  }
  for (int c : committee) {
    Rational collected = 0;
    for (int i = 0; i < n; ++i) collected += ps.payments[i][c];
    if (collected != ps.price) return false;
  }
  for (int c = 0; c < m; ++c) {
    if (in_w[c]) continue;
    Rational change = 0;
    for (int i : e.approvers(c)) {
      Rational spent = 0;
      for (int cw : committee) spent += ps.payments[i][cw];
      change += Rational(1) - spent;
    }
    if (change > ps.price) return false;
  }
  return true;
}

}  // namespace droopjr
