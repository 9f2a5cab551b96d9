#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "detail.hpp"
#include "droopjr/rules.hpp"

namespace droopjr {

namespace {

void emit_indices(std::ostream& out, const std::vector<int>& idx) {
  for (std::size_t j = 0; j < idx.size(); ++j) out << (j ? "," : "") << idx[j];
}

}  // namespace

std::string RuleTrace::serialize() const {
  std::ostringstream out;
  if (!selection_order.empty()) {
    out << "selection ";
    emit_indices(out, selection_order);
    out << '\n';
  }
  if (!filler.empty()) {
    out << "filler ";
    emit_indices(out, filler);
    out << '\n';
  }
  for (const auto& s : swaps)
    out << "swap out=" << s.removed << " in=" << s.added << " delta=" << to_string(s.delta)
        << '\n';
  for (const auto& s : gjcr_steps) {
    out << "gjcr l=" << s.level << " c=" << s.candidate << " S=";
    emit_indices(out, s.group);
    out << '\n';
  }
  for (const auto& s : gcr_steps) {
    out << "gcr l=" << s.level << " T=";
    emit_indices(out, s.target);
    out << " S=";
    emit_indices(out, s.group);
    out << '\n';
  }
  for (const auto& p : purchases) {
    out << "buy c=" << p.candidate << " q=" << to_string(p.threshold) << " pay";
    for (const auto& [voter, amount] : p.payments)
      out << ' ' << voter << ':' << to_string(amount);
    out << '\n';
  }
  if (!voter_spend.empty()) {
    out << "spend";
    for (const auto& s : voter_spend) out << ' ' << to_string(s);
    out << '\n';
  }
  if (!final_budgets.empty()) {
    out << "budgets";
    for (const auto& b : final_budgets) out << ' ' << to_string(b);
    out << '\n';
  }
  if (!assignment.empty()) {
    out << "assignment ";
    emit_indices(out, assignment);
    out << '\n';
  }
  if (monroe_score >= 0) out << "monroe_score " << monroe_score << '\n';
  for (const auto& w : co_optimal) {
    out << "co_optimal ";
    emit_indices(out, w);
    out << '\n';
  }
  return out.str();
}

RuleOutcome av(const Election& e, TieBreakPolicy tie) {
  RuleOutcome out;
  std::vector<bool> taken(e.m(), false);
  for (int round = 0; round < e.k(); ++round) {
    int best = -1;
    for (int c = 0; c < e.m(); ++c)
      if (!taken[c] && (best < 0 || e.approval_count(c) > e.approval_count(best))) best = c;
    std::vector<int> tied;
    for (int c = 0; c < e.m(); ++c)
      if (!taken[c] && e.approval_count(c) == e.approval_count(best)) tied.push_back(c);
    int pick = tie.choose(tied);
    taken[pick] = true;
    out.trace.selection_order.push_back(pick);
  }
  out.committee = out.trace.selection_order;
  std::sort(out.committee.begin(), out.committee.end());
  return out;
}

Rational pav_score(const Election& e, const std::vector<int>& committee) {
  for (int c : committee)
    if (c < 0 || c >= e.m()) throw std::invalid_argument("pav_score: candidate out of range");
  CandSet w = indices_to_set(e.m(), committee);
  // Sum harmonic numbers H_{|W cap A_i|}; cache H by count.
  std::vector<Rational> harmonic(static_cast<std::size_t>(e.m()) + 1);
  for (int j = 1; j <= e.m(); ++j) harmonic[j] = harmonic[j - 1] + make_rational(1, j);
  Rational score = 0;
  for (int i = 0; i < e.n(); ++i) score += harmonic[(e.ballot(i) & w).count()];
  return score;
}

RuleOutcome pav_exact(const Election& e, TieBreakPolicy /*tie*/, bool collect_co_optimal) {
  if (detail::binomial_capped(e.m(), e.k(), 10'000'000) > 10'000'000)
    throw std::runtime_error("pav_exact: instance too large, C(m,k) exceeds 10^7");
  RuleOutcome out;
  Rational best = -1;
  detail::for_each_combination(e.m(), e.k(), [&](const std::vector<int>& comb) {
    Rational s = pav_score(e, comb);
    if (s > best) {
      best = s;
      out.committee = comb;
      if (collect_co_optimal) out.trace.co_optimal = {comb};
    } else if (collect_co_optimal && s == best) {
      out.trace.co_optimal.push_back(comb);
    }
    return true;
  });
  return out;
}

Rational default_ls_pav_epsilon(const Election& e) {
  return make_rational(1, static_cast<long long>(e.k()) * e.k());
}

RuleOutcome ls_pav(const Election& e, const Rational& epsilon,
                   std::optional<std::vector<int>> initial, TieBreakPolicy tie) {
  if (epsilon <= 0) throw std::invalid_argument("ls_pav: epsilon must be positive");
  std::vector<int> committee = initial ? *initial : av(e, tie).committee;
  std::sort(committee.begin(), committee.end());
  if (static_cast<int>(committee.size()) != e.k())
    throw std::invalid_argument("ls_pav: initial committee must have size k");

  std::vector<bool> in_w(e.m(), false);
  for (int c : committee) in_w[c] = true;
  // count[i] = |W cap A_i|, maintained across swaps
  std::vector<int> count(e.n(), 0);
  for (int c : committee)
    for (int i : e.approvers(c)) ++count[i];

  RuleOutcome out;
  auto swap_delta = [&](int removed, int added) {
    Rational delta = 0;
    for (int i : e.approvers(added))
      if (!e.ballot(i).test(removed)) delta += make_rational(1, count[i] + 1);
    for (int i : e.approvers(removed))
      if (!e.ballot(i).test(added)) delta -= make_rational(1, count[i]);
    return delta;
  };

  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t wi = 0; wi < committee.size() && !improved; ++wi) {
      int removed = committee[wi];
      for (int added = 0; added < e.m() && !improved; ++added) {
        if (in_w[added]) continue;
        Rational delta = swap_delta(removed, added);
        if (delta >= epsilon) {
          out.trace.swaps.push_back({removed, added, delta});
          in_w[removed] = false;
          in_w[added] = true;
          for (int i : e.approvers(removed)) --count[i];
          for (int i : e.approvers(added)) ++count[i];
          committee[wi] = added;
          std::sort(committee.begin(), committee.end());
          improved = true;
        }
      }
    }
  }
  out.committee = committee;
  return out;
}

}  // namespace droopjr
