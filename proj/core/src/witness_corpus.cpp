#include "droopjr/witness.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "droopjr/axioms.hpp"
#include "droopjr/rules.hpp"
#include "droopjr/sampling.hpp"

namespace droopjr {
namespace {

// Collects assertion outcomes so a regression reports every broken claim, not
// just the first.
struct Scenario {
  std::ostringstream log;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    log << (cond ? "  ok: " : "  REGRESSION: ") << what << "\n";
    if (!cond) ok = false;
  }
};

Election make_election(int m, int k, const std::vector<std::vector<int>>& ballots) {
  std::vector<CandSet> sets;
  sets.reserve(ballots.size());
  for (const auto& b : ballots) sets.push_back(indices_to_set(m, b));
  return Election(m, static_cast<int>(ballots.size()), k, std::move(sets));
}

// Repeats one approval set for `count` consecutive voters.
void add_block(std::vector<std::vector<int>>& ballots, int count, std::vector<int> approved) {
  for (int i = 0; i < count; ++i) ballots.push_back(approved);
}

bool fails(const Election& e, const std::vector<int>& w, Axiom a, Quota q, Scenario& s,
           const std::string& label) {
  auto witness = check(e, w, a, q);
  s.require(witness.has_value(), label + " fails " + quota_name(q) + "-" + axiom_name(a));
  if (witness)
    s.require(witness_revalidates(e, w, *witness), label + " witness revalidates");
  return witness.has_value();
}

bool passes(const Election& e, const std::vector<int>& w, Axiom a, Quota q, Scenario& s,
            const std::string& label) {
  bool pass = !check(e, w, a, q);
  s.require(pass, label + " provides " + quota_name(q) + "-" + axiom_name(a));
  return pass;
}

std::string committee_str(const std::vector<int>& w) {
  std::string out = "{";
  for (size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + "}";
}

// Three voters approve only candidate 0, four approve only candidate 1, k=2.
// The trio clears the Droop one-seat threshold but holds 3 < 7/2 dollars, so
// equal-shares rules at unit budget never buy its candidate.
void mes_not_droop_jr(Scenario& s) {
  std::vector<std::vector<int>> ballots;
  add_block(ballots, 3, {0});
  add_block(ballots, 4, {1});
  Election e = make_election(2, 2, ballots);
  for (auto variant : {SharesVariant::MES, SharesVariant::EES}) {
    auto out = mes(e, Rational(1), variant);
    std::string label = variant == SharesVariant::MES ? "mes" : "ees";
    s.require(out.committee == std::vector<int>{1},
              label + " at unit budget elects only candidate 1");
    fails(e, out.committee, Axiom::JR, Quota::Droop, s, label + " outcome");
  }
}

// n=9, k=3: seven voters approve {0,1,2}, two approve {3}. The seven-voter
// group is Droop 3-cohesive yet the score-optimal assignment swaps one of its
// candidates for candidate 3 (scores 7 vs 8).
void monroe_not_droop_pjr(Scenario& s) {
  {
    std::vector<std::vector<int>> ballots;
    add_block(ballots, 7, {0, 1, 2});
    add_block(ballots, 2, {3});
    Election e = make_election(4, 3, ballots);
    s.require(monroe_score(e, {0, 1, 2}, Quota::Hare).score == 7,
              "n=9 committee {0,1,2} scores 7");
    s.require(monroe_score(e, {0, 1, 3}, Quota::Hare).score == 8,
              "n=9 committee {0,1,3} scores 8");
    auto opt = monroe(e, Quota::Hare);
    fails(e, opt.committee, Axiom::PJR, Quota::Droop, s,
          "monroe outcome " + committee_str(opt.committee));
    auto greedy = greedy_monroe(e, Quota::Hare);
    fails(e, greedy.committee, Axiom::PJR, Quota::Droop, s,
          "greedy monroe outcome " + committee_str(greedy.committee));
  }
  // n=15, k=2 with (k+1) | n: eleven voters approve {0,1}, four approve {2};
  // scores 11 vs 12.
  {
    std::vector<std::vector<int>> ballots;
    add_block(ballots, 11, {0, 1});
    add_block(ballots, 4, {2});
    Election e = make_election(3, 2, ballots);
    s.require(monroe_score(e, {0, 1}, Quota::Hare).score == 11,
              "n=15 committee {0,1} scores 11");
    s.require(monroe_score(e, {0, 2}, Quota::Hare).score == 12,
              "n=15 committee {0,2} scores 12");
    auto opt = monroe(e, Quota::Hare);
    fails(e, opt.committee, Axiom::PJR, Quota::Droop, s,
          "monroe outcome " + committee_str(opt.committee));
    auto greedy = greedy_monroe(e, Quota::Hare);
    fails(e, greedy.committee, Axiom::PJR, Quota::Droop, s,
          "greedy monroe outcome " + committee_str(greedy.committee));
  }
}

// The positive counterpart: when k divides n, exhaustive Monroe under the
// Hare caps always provides Droop-JR. Spot-checked on sampled instances.
void monroe_droop_jr_divisible(Scenario& s) {
  int idx = 0;
  for (int n : {6, 9, 12})
    for (double p : {0.3, 0.6}) {
      SamplerConfig cfg;
      cfg.model = BallotModel::ImpartialCulture;
      cfg.p = p;
      cfg.m = 5;
      cfg.n = n;
      cfg.seed = derive_seed(20260823, idx++);
      Election e = sample_election(cfg, 3);
      auto out = monroe(e, Quota::Hare);
      passes(e, out.committee, Axiom::JR, Quota::Droop, s,
             "monroe on n=" + std::to_string(n) + " p=" + std::to_string(p) + " instance");
    }
}

// n=21, k=7 with 21 mod 8 = 5: sixteen voters approve {0..5}, plus three
// singleton parties. Droop seat caps let the optimum drop one of the six
// jointly approved candidates (scores 18 vs 19).
void droop_monroe_not_droop_pjr(Scenario& s) {
  std::vector<std::vector<int>> ballots;
  add_block(ballots, 16, {0, 1, 2, 3, 4, 5});
  add_block(ballots, 2, {6});
  add_block(ballots, 2, {7});
  add_block(ballots, 1, {8});
  Election e = make_election(9, 7, ballots);
  s.require(monroe_score(e, {0, 1, 2, 3, 4, 5, 6}, Quota::Droop).score == 18,
            "committee {0..5,6} scores 18 under Droop caps");
  s.require(monroe_score(e, {0, 1, 2, 3, 4, 6, 7}, Quota::Droop).score == 19,
            "committee {0..4,6,7} scores 19 under Droop caps");
  auto opt = monroe(e, Quota::Droop);
  fails(e, opt.committee, Axiom::PJR, Quota::Droop, s,
        "droop monroe outcome " + committee_str(opt.committee));
  auto greedy = greedy_monroe(e, Quota::Droop);
  s.require(greedy.committee == std::vector<int>({0, 1, 2, 3, 4, 6, 7}),
            "droop greedy monroe selects {0,1,2,3,4,6,7}");
  fails(e, greedy.committee, Axiom::PJR, Quota::Droop, s, "droop greedy monroe outcome");
}

// n=100, k=4, five single-candidate parties of sizes 25/22/19/13/21. With
// scripted filler assignment that bleeds party-4 voters into earlier rounds,
// Greedy Monroe skips candidate 4 even though its party clears the Droop
// threshold.
void greedy_monroe_tiebreak(Scenario& s) {
  std::vector<std::vector<int>> ballots;
  int sizes[5] = {25, 22, 19, 13, 21};
  for (int c = 0; c < 5; ++c) add_block(ballots, sizes[c], {c});
  Election e = make_election(5, 4, ballots);
  // Party 4 occupies voters 79..99; the script donates 79..81 to round 2 and
  // 82..87 to round 3. All other assignment decisions are forced or maximal.
  TieBreakPolicy tie = TieBreakPolicy::scripted({79, 80, 81, 82, 83, 84, 85, 86, 87});
  auto out = greedy_monroe(e, Quota::Hare, tie);
  s.require(out.committee == std::vector<int>({0, 1, 2, 3}),
            "scripted greedy monroe selects {0,1,2,3}");
  fails(e, out.committee, Axiom::JR, Quota::Droop, s, "scripted greedy monroe outcome");
  // Lexicographic filler assignment instead drains party 3 first and candidate
  // 4 survives to the final round.
  auto lex = greedy_monroe(e, Quota::Hare);
  passes(e, lex.committee, Axiom::JR, Quota::Droop, s,
         "lexicographic greedy monroe outcome " + committee_str(lex.committee));
}

// n=3, k=1: voters 0,1 approve candidate 1; voter 2 approves candidate 0.
// The Hare threshold n/k = 3 is out of reach, so the Hare variants elect via
// arbitrary filler; the pair {0,1} still clears the Droop threshold.
void hare_rule_not_droop_jr(Scenario& s, bool use_gcr) {
  Election e = make_election(2, 1, {{1}, {1}, {0}});
  auto rule = [&](Quota q) { return use_gcr ? gcr(e, q) : gjcr(e, q); };
  std::string name = use_gcr ? "gcr" : "gjcr";
  auto hare = rule(Quota::Hare);
  s.require(hare.trace.selection_order.empty() && hare.trace.gcr_steps.empty() &&
                hare.trace.gjcr_steps.empty(),
            "hare " + name + " main loop selects nothing");
  s.require(hare.committee == std::vector<int>{0},
            "hare " + name + " fills with candidate 0");
  fails(e, hare.committee, Axiom::JR, Quota::Droop, s, "hare " + name + " outcome");
  auto droop = rule(Quota::Droop);
  s.require(droop.committee == std::vector<int>{1},
            "droop " + name + " elects the majority candidate");
  passes(e, droop.committee, Axiom::JR, Quota::Droop, s, "droop " + name + " outcome");
}

// Two voters with ballots {0,1} and {0,2}, k=2: committee {1,2} satisfies
// Droop-FJR yet fails Droop-EJR+ (both voters deserve two seats and jointly
// approve the unelected candidate 0), so neither axiom implies the other.
void fjr_ejrplus_incomparable(Scenario& s) {
  Election e = make_election(3, 2, {{0, 1}, {0, 2}});
  std::vector<int> w = {1, 2};
  passes(e, w, Axiom::FJR, Quota::Droop, s, "committee {1,2}");
  auto witness = check(e, w, Axiom::EJRplus, Quota::Droop);
  s.require(witness.has_value(), "committee {1,2} fails Droop-EJR+");
  if (witness) {
    s.require(witness->level == 2 && witness->target == std::vector<int>{0},
              "violation is level 2 via candidate 0");
    s.require(witness_revalidates(e, w, *witness), "witness revalidates");
  }
}

const std::map<std::string, std::function<void(Scenario&)>>& corpus() {
  static const std::map<std::string, std::function<void(Scenario&)>> c = {
      {"mes-not-droop-jr", mes_not_droop_jr},
      {"monroe-not-droop-pjr", monroe_not_droop_pjr},
      {"monroe-droop-jr-divisible", monroe_droop_jr_divisible},
      {"droop-monroe-not-droop-pjr", droop_monroe_not_droop_pjr},
      {"greedy-monroe-tiebreak", greedy_monroe_tiebreak},
      {"gjcr-not-droop-jr", [](Scenario& s) { hare_rule_not_droop_jr(s, false); }},
      {"gcr-not-droop-jr", [](Scenario& s) { hare_rule_not_droop_jr(s, true); }},
      {"fjr-ejrplus-incomparable", fjr_ejrplus_incomparable},
  };
  return c;
}

}  // namespace

std::vector<std::string> witness_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : corpus()) names.push_back(name);
  return names;
}

WitnessResult run_witness(const std::string& name) {
  auto it = corpus().find(name);
  if (it == corpus().end()) throw std::out_of_range("unknown witness scenario: " + name);
  Scenario s;
  try {
    it->second(s);
  } catch (const std::exception& ex) {
    s.ok = false;
    s.log << "  REGRESSION: unexpected exception: " << ex.what() << "\n";
  }
  return {name, s.ok, s.log.str()};
}

}  // namespace droopjr
