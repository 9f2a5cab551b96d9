#include <algorithm>
#include <stdexcept>

#include "droopjr/rules.hpp"

namespace droopjr {

namespace {

// Smallest q with sum_{i in N_c} min(b_i, q) = cost, or nullopt when the
// supporters cannot cover the cost at all.
std::optional<Rational> mes_threshold(const std::vector<Rational>& budgets,
                                      const std::vector<int>& supporters,
                                      const Rational& cost) {
  if (supporters.empty()) return std::nullopt;
  std::vector<Rational> b;
  b.reserve(supporters.size());
  for (int i : supporters) b.push_back(budgets[i]);
  std::sort(b.begin(), b.end());
  Rational total = 0;
  for (const auto& x : b) total += x;
  if (total < cost) return std::nullopt;
  // After the j smallest budgets are exhausted, the rest pay q each.
  Rational prefix = 0;
  const int s = static_cast<int>(b.size());
  for (int j = 0; j < s; ++j) {
    Rational q = (cost - prefix) / (s - j);
    if (q <= b[j]) return q;
    prefix += b[j];
  }
  return cost - prefix + b.back();  // total == cost exactly: q = max budget
}

// Supporters sorted by budget descending (index ascending among equals); the
// threshold is cost/t for the largest prefix t whose members can all pay it.
std::optional<Rational> ees_threshold(const std::vector<Rational>& budgets,
                                      const std::vector<int>& supporters,
                                      const Rational& cost,
                                      std::vector<int>* payers = nullptr) {
  if (supporters.empty()) return std::nullopt;
  std::vector<int> order = supporters;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return budgets[a] > budgets[b]; });
  int best_t = 0;
  for (int t = 1; t <= static_cast<int>(order.size()); ++t)
    if (budgets[order[t - 1]] * t >= cost) best_t = t;
  if (best_t == 0) return std::nullopt;
  if (payers) payers->assign(order.begin(), order.begin() + best_t);
  return cost / best_t;
}

}  // namespace

Rational droop_budget(const Election& e) {
  const long long n = e.n(), k = e.k();
  return Rational(BigInt((k + 1) * n), BigInt(k * n + 1));
}

RuleOutcome mes(const Election& e, const Rational& budget, SharesVariant variant,
                TieBreakPolicy tie) {
  if (budget <= 0) throw std::invalid_argument("mes: budget must be positive");
  const Rational cost = make_rational(e.n(), e.k());
  std::vector<Rational> budgets(e.n(), budget);
  RuleOutcome out;
  std::vector<bool> in_w(e.m(), false);

  while (static_cast<int>(out.committee.size()) < e.k()) {
    std::optional<Rational> best;
    std::vector<int> tied;
    for (int c = 0; c < e.m(); ++c) {
      if (in_w[c]) continue;
      auto q = variant == SharesVariant::MES
                   ? mes_threshold(budgets, e.approvers(c), cost)
                   : ees_threshold(budgets, e.approvers(c), cost);
      if (!q) continue;
      if (!best || *q < *best) {
        best = q;
        tied = {c};
      } else if (*q == *best) {
        tied.push_back(c);
      }
    }
    if (!best) break;
    int pick = tie.choose(tied);
    Purchase purchase{pick, *best, {}};
    if (variant == SharesVariant::MES) {
      for (int i : e.approvers(pick)) {
        Rational pay = std::min(budgets[i], *best);
        if (pay > 0) purchase.payments.emplace_back(i, pay);
        budgets[i] -= pay;
      }
    } else {
      std::vector<int> payers;
      ees_threshold(budgets, e.approvers(pick), cost, &payers);
      std::sort(payers.begin(), payers.end());
      for (int i : payers) {
        purchase.payments.emplace_back(i, *best);
        budgets[i] -= *best;
        if (budgets[i] < 0) throw std::logic_error("ees: negative budget");
      }
    }
    Rational paid = 0;
    for (const auto& [voter, amount] : purchase.payments) paid += amount;
    if (paid != cost) throw std::logic_error("mes: payments do not cover candidate cost");
    in_w[pick] = true;
    out.committee.push_back(pick);
    out.trace.selection_order.push_back(pick);
    out.trace.purchases.push_back(std::move(purchase));
  }
  std::sort(out.committee.begin(), out.committee.end());
  out.trace.final_budgets = std::move(budgets);
  return out;
}

RuleOutcome seq_phragmen(const Election& e, const std::vector<Rational>& start_budgets,
                         int slots, TieBreakPolicy tie, const std::vector<int>& excluded) {
  if (slots < 1) throw std::invalid_argument("seq_phragmen: slots must be >= 1");
  const Rational cost = make_rational(e.n(), e.k());
  std::vector<Rational> balance =
      start_budgets.empty() ? std::vector<Rational>(e.n(), Rational(0)) : start_budgets;
  if (static_cast<int>(balance.size()) != e.n())
    throw std::invalid_argument("seq_phragmen: start budget count != n");

  std::vector<bool> out_of_play(e.m(), false);
  for (int c : excluded) out_of_play[c] = true;

  RuleOutcome out;
  for (int slot = 0; slot < slots; ++slot) {
    // Time until each candidate's supporter pool reaches the cost.
    std::optional<Rational> best_t;
    std::vector<int> tied;
    for (int c = 0; c < e.m(); ++c) {
      if (out_of_play[c] || e.approvers(c).empty()) continue;
      Rational have = 0;
      for (int i : e.approvers(c)) have += balance[i];
      Rational t = (cost - have) / static_cast<long long>(e.approvers(c).size());
      if (t < 0) t = 0;
      if (!best_t || t < *best_t) {
        best_t = t;
        tied = {c};
      } else if (t == *best_t) {
        tied.push_back(c);
      }
    }
    if (best_t) {
      int pick = tie.choose(tied);
      for (auto& b : balance) b += *best_t;
      Purchase purchase{pick, *best_t, {}};
      for (int i : e.approvers(pick)) {
        if (balance[i] > 0) purchase.payments.emplace_back(i, balance[i]);
        balance[i] = 0;
      }
      out_of_play[pick] = true;
      out.committee.push_back(pick);
      out.trace.selection_order.push_back(pick);
      out.trace.purchases.push_back(std::move(purchase));
    } else {
      // Only unsupported candidates remain.
      for (int c = 0; c < e.m(); ++c) {
        if (!out_of_play[c]) {
          out_of_play[c] = true;
          out.committee.push_back(c);
          out.trace.filler.push_back(c);
          break;
        }
      }
    }
  }
  std::sort(out.committee.begin(), out.committee.end());
  out.trace.final_budgets = std::move(balance);
  return out;
}

RuleOutcome mes_completed(const Election& e, const Rational& budget, SharesVariant variant,
                          TieBreakPolicy tie) {
  RuleOutcome base = mes(e, budget, variant, tie);
  int remaining = e.k() - static_cast<int>(base.committee.size());
  if (remaining == 0) return base;
  RuleOutcome tail =
      seq_phragmen(e, base.trace.final_budgets, remaining, tie, base.committee);
  RuleOutcome out;
  out.committee = base.committee;
  out.committee.insert(out.committee.end(), tail.committee.begin(), tail.committee.end());
  std::sort(out.committee.begin(), out.committee.end());
  out.trace = std::move(base.trace);
  out.trace.selection_order.insert(out.trace.selection_order.end(),
                                   tail.trace.selection_order.begin(),
                                   tail.trace.selection_order.end());
  out.trace.filler = tail.trace.filler;
  out.trace.purchases.insert(out.trace.purchases.end(), tail.trace.purchases.begin(),
                             tail.trace.purchases.end());
  out.trace.final_budgets = std::move(tail.trace.final_budgets);
  return out;
}

}  // namespace droopjr
