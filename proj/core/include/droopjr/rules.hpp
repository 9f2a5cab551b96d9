#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "droopjr/election.hpp"
#include "droopjr/tiebreak.hpp"

namespace droopjr {

struct SwapStep {
  int removed;
  int added;
  Rational delta;
};

struct GjcrStep {
  int level;
  int candidate;
  std::vector<int> group;  // maximal triggering group
};

struct GcrStep {
  int level;
  std::vector<int> target;
  std::vector<int> group;
};

struct Purchase {
  int candidate;
  Rational threshold;  // affordability threshold (MES/EES) or purchase time (Phragmen)
  std::vector<std::pair<int, Rational>> payments;
};

// Committee plus an auditable record of how the rule arrived at it. Only the
// sections relevant to the rule that produced the outcome are populated.
struct RuleTrace {
  std::vector<int> selection_order;
  std::vector<int> filler;  // candidates added outside the main loop
  std::vector<SwapStep> swaps;
  std::vector<GjcrStep> gjcr_steps;
  std::vector<Rational> voter_spend;    // per-voter total spend (GJCR ledger)
  std::vector<GcrStep> gcr_steps;
  std::vector<Purchase> purchases;      // MES / EES / SeqPhragmen
  std::vector<Rational> final_budgets;  // per voter
  std::vector<int> assignment;          // Monroe / Greedy Monroe; -1 = dummy
  long long monroe_score = -1;
  std::vector<std::vector<int>> co_optimal;  // pav_exact, on request

  std::string serialize() const;  // stable text format for golden-file tests
};

struct RuleOutcome {
  std::vector<int> committee;  // ascending
  RuleTrace trace;
};

// --- score-based rules ------------------------------------------------------

RuleOutcome av(const Election& e, TieBreakPolicy tie = TieBreakPolicy::lexicographic());

Rational pav_score(const Election& e, const std::vector<int>& committee);

// Exhaustive PAV; guard: C(m,k) <= 10^7, otherwise throws.
RuleOutcome pav_exact(const Election& e,
                      TieBreakPolicy tie = TieBreakPolicy::lexicographic(),
                      bool collect_co_optimal = false);

// Local-search PAV. Starts from `initial` (default: the AV committee), takes
// the first swap in (removed ascending, added ascending) scan order whose PAV
// score gain is >= epsilon, until no such swap exists.
RuleOutcome ls_pav(const Election& e, const Rational& epsilon,
                   std::optional<std::vector<int>> initial = std::nullopt,
                   TieBreakPolicy tie = TieBreakPolicy::lexicographic());

Rational default_ls_pav_epsilon(const Election& e);  // 1/k^2

// --- greedy candidate rules -------------------------------------------------

// Greedy Justified Candidate Rule. The Droop variant also maintains the
// per-voter spend ledger (unit candidate cost split over the triggering group)
// and asserts no voter ever spends more than (k+1)/n - 1/n^2.
RuleOutcome gjcr(const Election& e, Quota q,
                 TieBreakPolicy tie = TieBreakPolicy::lexicographic());

// Greedy Cohesive Rule. Guard: m <= 24, otherwise throws.
RuleOutcome gcr(const Election& e, Quota q,
                TieBreakPolicy tie = TieBreakPolicy::lexicographic());

// --- budget rules -----------------------------------------------------------

enum class SharesVariant { MES, EES };

// Per-voter virtual budget (k+1)n/(kn+1) that makes MES/EES Droop-proportional.
Rational droop_budget(const Election& e);

// Method of Equal Shares / Exact Equal Shares at per-voter budget `budget`;
// candidate cost is n/k. May return fewer than k candidates.
RuleOutcome mes(const Election& e, const Rational& budget,
                SharesVariant variant = SharesVariant::MES,
                TieBreakPolicy tie = TieBreakPolicy::lexicographic());

// Continuous-load sequential Phragmen: voters accrue money at unit rate on top
// of start_budgets; a candidate is bought the instant its supporters' combined
// balance reaches the cost n/k, and the buyers' balances reset to zero.
// Candidates in `excluded` are never considered. Fills all slots whenever
// enough candidates remain.
RuleOutcome seq_phragmen(const Election& e, const std::vector<Rational>& start_budgets,
                         int slots, TieBreakPolicy tie = TieBreakPolicy::lexicographic(),
                         const std::vector<int>& excluded = {});

// mes() followed, if needed, by seq_phragmen() on the residual budgets.
RuleOutcome mes_completed(const Election& e, const Rational& budget,
                          SharesVariant variant = SharesVariant::MES,
                          TieBreakPolicy tie = TieBreakPolicy::lexicographic());

// --- Monroe family ----------------------------------------------------------

struct MonroeScore {
  long long score;
  std::vector<int> assignment;  // per voter; -1 = dummy (Droop only)
};

// Optimal capacity-constrained assignment of all voters to the committee
// (plus, under Droop, a dummy seat of exact capacity floor(n/(k+1))), scored
// by the number of voters assigned to a candidate they approve.
MonroeScore monroe_score(const Election& e, const std::vector<int>& committee, Quota q);

// Exhaustive Monroe; guard: C(m,k) <= 10^7, otherwise throws.
RuleOutcome monroe(const Election& e, Quota q,
                   TieBreakPolicy tie = TieBreakPolicy::lexicographic());

RuleOutcome greedy_monroe(const Election& e, Quota q,
                          TieBreakPolicy tie = TieBreakPolicy::lexicographic());

}  // namespace droopjr
