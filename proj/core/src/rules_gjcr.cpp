#include <algorithm>
#include <stdexcept>

#include "droopjr/rules.hpp"

namespace droopjr {

RuleOutcome gjcr(const Election& e, Quota q, TieBreakPolicy tie) {
  const int n = e.n(), m = e.m(), k = e.k();
  RuleOutcome out;
  std::vector<bool> in_w(m, false);
  std::vector<int> count(n, 0);  // |W cap A_i|
  std::vector<Rational> spend(n, Rational(0));
  // Thm-level bound on any voter's cumulative spend under the Droop variant.
  const Rational spend_cap =
      make_rational(k + 1, n) - make_rational(1, static_cast<long long>(n) * n);
  int selected = 0;

  for (int level = k; level >= 1; --level) {
    bool found = true;
    while (found && selected < k) {
      found = false;
      std::vector<int> eligible;
      for (int c = 0; c < m; ++c) {
        if (in_w[c]) continue;
        int size = 0;
        for (int i : e.approvers(c))
          if (count[i] <= level - 1) ++size;
        if (group_clears_quota(q, size, level, e)) eligible.push_back(c);
      }
      if (!eligible.empty()) {
        int pick = tie.choose(eligible);
        std::vector<int> group;
        for (int i : e.approvers(pick))
          if (count[i] <= level - 1) group.push_back(i);
        if (q == Quota::Droop) {
          Rational share = make_rational(1, static_cast<long long>(group.size()));
          for (int i : group) {
            spend[i] += share;
            if (spend[i] > spend_cap)
              throw std::logic_error("gjcr: pricing ledger overdraft");
          }
        }
        in_w[pick] = true;
        ++selected;
        for (int i : e.approvers(pick)) ++count[i];
        out.trace.gjcr_steps.push_back({level, pick, std::move(group)});
        out.trace.selection_order.push_back(pick);
        found = true;
      }
    }
    if (selected == k) break;
  }
  for (int c = 0; c < m && selected < k; ++c) {
    if (in_w[c]) continue;
    in_w[c] = true;
    ++selected;
    out.trace.filler.push_back(c);
  }
  if (q == Quota::Droop) out.trace.voter_spend = std::move(spend);
  for (int c = 0; c < m; ++c)
    if (in_w[c]) out.committee.push_back(c);
  return out;
}

}  // namespace droopjr
