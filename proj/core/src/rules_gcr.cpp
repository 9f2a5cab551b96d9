#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "detail.hpp"
#include "droopjr/rules.hpp"

namespace droopjr {

RuleOutcome gcr(const Election& e, Quota q, TieBreakPolicy /*tie*/) {
  const int n = e.n(), m = e.m(), k = e.k();
  if (m > 24) throw std::runtime_error("gcr: instance too large, m > 24");

  std::vector<std::uint32_t> ballots(n);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < m; ++c)
      if (e.ballot(i).test(c)) ballots[i] |= 1u << c;

  RuleOutcome out;
  std::vector<bool> active(n, true), in_w(m, false);
  int total_selected = 0;

  while (true) {
    // Best triple: largest level, then smallest |T|, then lexicographic T.
    // Only candidates approved by some active voter can contribute.
    std::uint32_t approved = 0;
    for (int i = 0; i < n; ++i)
      if (active[i]) approved |= ballots[i];
    std::vector<int> allowed;
    for (int c = 0; c < m; ++c)
      if (!in_w[c] && (approved >> c & 1)) allowed.push_back(c);

    int best_level = 0;
    std::uint32_t best_target = 0;
    for (int level = k; level >= 1 && best_level == 0; --level) {
      for (int t_size = level;
           t_size <= k && t_size <= static_cast<int>(allowed.size()) && best_level == 0;
           ++t_size) {
        detail::for_each_combination(
            static_cast<int>(allowed.size()), t_size, [&](const std::vector<int>& comb) {
              std::uint32_t target = 0;
              for (int j : comb) target |= 1u << allowed[j];
              int size = 0;
              for (int i = 0; i < n; ++i)
                if (active[i] && std::popcount(ballots[i] & target) >= level) ++size;
              if (group_clears_quota(q, size, t_size, e)) {
                best_level = level;
                best_target = target;
                return false;
              }
              return true;
            });
      }
    }
    if (best_level == 0) break;

    GcrStep step;
    step.level = best_level;
    for (int c = 0; c < m; ++c)
      if (best_target >> c & 1) {
        step.target.push_back(c);
        in_w[c] = true;
        out.committee.push_back(c);
      }
    for (int i = 0; i < n; ++i)
      if (active[i] && std::popcount(ballots[i] & best_target) >= best_level) {
        active[i] = false;
        step.group.push_back(i);
      }
    total_selected += static_cast<int>(step.target.size());
    // Each selected block deactivates a quota-clearing share of the voters,
    // so the blocks can never exceed k candidates in total.
    if (total_selected > k) throw std::logic_error("gcr: selected more than k candidates");
    out.trace.gcr_steps.push_back(std::move(step));
  }

  for (int c = 0; c < m && total_selected < k; ++c) {
    if (in_w[c]) continue;
    in_w[c] = true;
    ++total_selected;
    out.committee.push_back(c);
    out.trace.filler.push_back(c);
  }
  std::sort(out.committee.begin(), out.committee.end());
  return out;
}

}  // namespace droopjr
