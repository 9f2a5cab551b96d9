#include <set>

#include "doctest.h"
#include "droopjr/axioms.hpp"
#include "droopjr/rules.hpp"
#include "droopjr/sampling.hpp"

using namespace droopjr;

namespace {

Election mes_instance() { return parse_election("2 7 2\n0\n0\n0\n1\n1\n1\n1\n"); }

// Seven voters approve {0,1,2}, two approve {3}; n=9, k=3.
Election monroe9() {
  std::string text = "4 9 3\n";
  for (int i = 0; i < 7; ++i) text += "0,1,2\n";
  for (int i = 0; i < 2; ++i) text += "3\n";
  return parse_election(text);
}

Election cor1() { return parse_election("3 2 2\n0,1\n0,2\n"); }

Election random_election(int m, int n, int k, double p, uint64_t seed) {
  SamplerConfig cfg;
  cfg.model = BallotModel::ImpartialCulture;
  cfg.p = p;
  cfg.m = m;
  cfg.n = n;
  cfg.seed = seed;
  return sample_election(cfg, k);
}

}  // namespace

TEST_CASE("av picks the approval maximizers") {
  CHECK(av(mes_instance()).committee == std::vector<int>{0, 1});
  CHECK(av(parse_election("1 2 1\n0\n0\n")).committee == std::vector<int>{0});
  // counts 5,5,1 with k=1: lexicographic tie-break takes candidate 0
  std::string text = "3 6 1\n";
  for (int i = 0; i < 5; ++i) text += "0,1\n";
  text += "2\n";
  CHECK(av(parse_election(text)).committee == std::vector<int>{0});
}

TEST_CASE("pav_score is the exact harmonic sum") {
  Election e = cor1();
  CHECK(pav_score(e, {0, 1}) == make_rational(5, 2));
  CHECK(pav_score(e, {}) == Rational(0));
  CHECK(pav_score(e, {1, 2}) == Rational(2));
  CHECK(pav_score(monroe9(), {0, 1, 2}) == make_rational(77, 6));
}

TEST_CASE("pav_exact maximizes over all committees") {
  CHECK(pav_exact(cor1()).committee == std::vector<int>{0, 1});
  CHECK(pav_exact(parse_election("1 3 1\n0\n0\n0\n")).committee == std::vector<int>{0});
  auto out = pav_exact(monroe9(), TieBreakPolicy::lexicographic(), true);
  CHECK(out.committee == std::vector<int>{0, 1, 2});
  CHECK(out.trace.co_optimal == std::vector<std::vector<int>>{{0, 1, 2}});

  // self-oracle: recompute the score of every size-k committee independently
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Election e = random_election(6, 8, 3, 0.5, derive_seed(7, seed));
    auto best = pav_exact(e);
    Rational best_score = pav_score(e, best.committee);
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c)
          CHECK(pav_score(e, {a, b, c}) <= best_score);
  }
}

TEST_CASE("ls_pav takes improving swaps and stops at the threshold") {
  // two voters approve a=0, one approves b=1; initial {1} swaps to {0}
  Election e = parse_election("2 3 1\n0\n0\n1\n");
  auto out = ls_pav(e, Rational(1), std::vector<int>{1});
  CHECK(out.committee == std::vector<int>{0});
  REQUIRE(out.trace.swaps.size() == 1);
  CHECK(out.trace.swaps[0].removed == 1);
  CHECK(out.trace.swaps[0].added == 0);
  CHECK(out.trace.swaps[0].delta == Rational(1));

  // a locally optimal start returns unchanged with an empty swap log
  auto fixed = ls_pav(e, Rational(1), std::vector<int>{0});
  CHECK(fixed.committee == std::vector<int>{0});
  CHECK(fixed.trace.swaps.empty());
}

TEST_CASE("ls_pav fixed point: no remaining swap gains epsilon or more") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    Election e = random_election(8, 12, 3, 0.4, derive_seed(11, seed));
    Rational eps = default_ls_pav_epsilon(e);
    CHECK(eps == make_rational(1, 9));
    auto out = ls_pav(e, eps);
    Rational base = pav_score(e, out.committee);
    std::set<int> w(out.committee.begin(), out.committee.end());
    for (int removed : out.committee)
      for (int added = 0; added < e.m(); ++added) {
        if (w.count(added)) continue;
        std::vector<int> alt;
        for (int c : out.committee)
          if (c != removed) alt.push_back(c);
        alt.push_back(added);
        CHECK(pav_score(e, alt) - base < eps);
      }
  }
}

TEST_CASE("gjcr selects greedily by level and fills the remainder") {
  Election e = parse_election("2 3 1\n1\n1\n0\n");
  auto hare = gjcr(e, Quota::Hare);
  CHECK(hare.trace.gjcr_steps.empty());
  CHECK(hare.committee == std::vector<int>{0});
  auto droop = gjcr(e, Quota::Droop);
  REQUIRE(droop.trace.gjcr_steps.size() == 1);
  CHECK(droop.trace.gjcr_steps[0].level == 1);
  CHECK(droop.trace.gjcr_steps[0].candidate == 1);
  CHECK(droop.trace.gjcr_steps[0].group == std::vector<int>{0, 1});
  CHECK(droop.committee == std::vector<int>{1});

  // k = m with unanimous approval selects everyone in the main loop
  Election full = parse_election("3 3 3\n0,1,2\n0,1,2\n0,1,2\n");
  for (Quota q : {Quota::Hare, Quota::Droop}) {
    auto out = gjcr(full, q);
    CHECK(out.committee == std::vector<int>{0, 1, 2});
    CHECK(out.trace.filler.empty());
  }
}

TEST_CASE("droop gjcr ledger stays under the per-voter cap") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Election e = random_election(8, 15, 4, 0.5, derive_seed(13, seed));
    auto out = gjcr(e, Quota::Droop);  // would throw on an overdraft
    CHECK(out.committee.size() == 4);
    Rational cap = make_rational(e.k() + 1, e.n()) - make_rational(1, e.n() * e.n());
    for (const auto& spend : out.trace.voter_spend) CHECK(spend <= cap);
  }
}

TEST_CASE("mes at unit budget cannot afford the minority candidate") {
  Election e = mes_instance();
  for (auto variant : {SharesVariant::MES, SharesVariant::EES}) {
    auto out = mes(e, Rational(1), variant);
    CHECK(out.committee == std::vector<int>{1});
  }
}

TEST_CASE("mes at the droop budget elects both parties") {
  Election e = mes_instance();
  CHECK(droop_budget(e) == make_rational(7, 5));
  for (auto variant : {SharesVariant::MES, SharesVariant::EES}) {
    auto out = mes(e, droop_budget(e), variant);
    CHECK(out.committee == std::vector<int>{0, 1});
    // candidate 1 is cheaper per buyer (7/2 over four voters), so it goes first
    REQUIRE(out.trace.purchases.size() == 2);
    CHECK(out.trace.purchases[0].candidate == 1);
    CHECK(out.trace.purchases[0].threshold == make_rational(7, 8));
    CHECK(out.trace.purchases[1].candidate == 0);
    CHECK(out.trace.purchases[1].threshold == make_rational(7, 6));
  }
}

TEST_CASE("droop_budget evaluates (k+1)n/(kn+1)") {
  CHECK(droop_budget(parse_election("1 1 1\n0\n")) == Rational(1));
  Election big = random_election(11, 500, 10, 0.2, 3);
  CHECK(droop_budget(big) == make_rational(5500, 5001));
}

TEST_CASE("mes full symmetry drains every budget") {
  Election e = parse_election("3 4 3\n0,1,2\n0,1,2\n0,1,2\n0,1,2\n");
  auto out = mes(e, Rational(1));
  CHECK(out.committee == std::vector<int>{0, 1, 2});
  for (const auto& b : out.trace.final_budgets) CHECK(b == Rational(0));
}

TEST_CASE("mes payments always sum to the candidate cost") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    Election e = random_election(7, 12, 3, 0.5, derive_seed(17, seed));
    for (auto variant : {SharesVariant::MES, SharesVariant::EES}) {
      auto out = mes(e, droop_budget(e), variant);
      CHECK(out.committee.size() <= 3);
      Rational cost = make_rational(e.n(), e.k());
      for (const auto& buy : out.trace.purchases) {
        Rational total = 0;
        for (const auto& [voter, amount] : buy.payments) {
          CHECK(amount >= 0);
          total += amount;
        }
        CHECK(total == cost);
      }
      for (const auto& b : out.trace.final_budgets) CHECK(b >= 0);
    }
  }
}

TEST_CASE("seq_phragmen buys candidates at their earliest affordable time") {
  Election two = parse_election("1 2 1\n0\n0\n");
  auto out = seq_phragmen(two, {Rational(0), Rational(0)}, 1);
  CHECK(out.committee == std::vector<int>{0});
  REQUIRE(out.trace.purchases.size() == 1);
  CHECK(out.trace.purchases[0].threshold == Rational(1));  // cost n/k = 2 at rate 2

  Election one = parse_election("1 1 1\n0\n");
  CHECK(seq_phragmen(one, {Rational(0)}, 1).committee == std::vector<int>{0});
}

TEST_CASE("mes_completed fills the committee") {
  Election e = mes_instance();
  auto out = mes_completed(e, Rational(1));
  CHECK(out.committee.size() == 2);
  CHECK(out.committee == std::vector<int>{0, 1});

  for (uint64_t seed = 0; seed < 10; ++seed) {
    Election r = random_election(8, 10, 4, 0.4, derive_seed(19, seed));
    CHECK(mes_completed(r, Rational(1)).committee.size() == 4);
  }
}

TEST_CASE("monroe_score reproduces the published scores") {
  Election e9 = monroe9();
  CHECK(monroe_score(e9, {0, 1, 2}, Quota::Hare).score == 7);
  CHECK(monroe_score(e9, {0, 1, 3}, Quota::Hare).score == 8);

  std::string t15 = "3 15 2\n";
  for (int i = 0; i < 11; ++i) t15 += "0,1\n";
  for (int i = 0; i < 4; ++i) t15 += "2\n";
  Election e15 = parse_election(t15);
  CHECK(monroe_score(e15, {0, 1}, Quota::Hare).score == 11);
  CHECK(monroe_score(e15, {0, 2}, Quota::Hare).score == 12);

  std::string t21 = "9 21 7\n";
  for (int i = 0; i < 16; ++i) t21 += "0,1,2,3,4,5\n";
  t21 += "6\n6\n7\n7\n8\n";
  Election e21 = parse_election(t21);
  CHECK(monroe_score(e21, {0, 1, 2, 3, 4, 5, 6}, Quota::Droop).score == 18);
  CHECK(monroe_score(e21, {0, 1, 2, 3, 4, 6, 7}, Quota::Droop).score == 19);
}

TEST_CASE("monroe_score assignments respect the seat caps") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Election e = random_election(6, 11, 3, 0.5, derive_seed(23, seed));
    for (Quota q : {Quota::Hare, Quota::Droop}) {
      auto committee = random_committee(6, 3, derive_seed(29, seed));
      auto ms = monroe_score(e, committee, q);
      std::vector<int> load(7, 0);  // slot 6 counts the dummy
      long long matched = 0;
      REQUIRE(ms.assignment.size() == 11);
      for (int i = 0; i < 11; ++i) {
        int c = ms.assignment[i];
        if (c < 0) {
          REQUIRE(q == Quota::Droop);
          ++load[6];
        } else {
          ++load[c];
          if (e.ballot(i).test(c)) ++matched;
        }
      }
      CHECK(matched == ms.score);
      int div = q == Quota::Hare ? 3 : 4;
      for (int c : committee) {
        CHECK(load[c] >= 11 / div);
        CHECK(load[c] <= (11 + div - 1) / div);
      }
      if (q == Quota::Droop) CHECK(load[6] == 11 / 4);
    }
  }
}

TEST_CASE("monroe flow optimum matches assignment enumeration") {
  // brute force: every function from voters to seats with valid caps
  for (uint64_t seed = 0; seed < 6; ++seed) {
    Election e = random_election(4, 6, 2, 0.5, derive_seed(31, seed));
    for (Quota q : {Quota::Hare, Quota::Droop}) {
      std::vector<int> committee = {0, 2};
      auto ms = monroe_score(e, committee, q);
      int div = q == Quota::Hare ? 2 : 3;
      int lo = 6 / div, hi = (6 + div - 1) / div;
      int dummy_cap = q == Quota::Droop ? 6 / 3 : 0;
      int slots = q == Quota::Droop ? 3 : 2;
      long long best = -1;
      std::vector<int> assign(6, 0);
      // odometer over per-voter seat choices
      while (true) {
        std::vector<int> load(slots, 0);
        for (int i = 0; i < 6; ++i) ++load[assign[i]];
        bool valid = true;
        for (int s = 0; s < 2; ++s)
          if (load[s] < lo || load[s] > hi) valid = false;
        if (q == Quota::Droop && load[2] != dummy_cap) valid = false;
        if (valid) {
          long long score = 0;
          for (int i = 0; i < 6; ++i)
            if (assign[i] < 2 && e.ballot(i).test(committee[assign[i]])) ++score;
          best = std::max(best, score);
        }
        int pos = 0;
        while (pos < 6 && ++assign[pos] == slots) assign[pos++] = 0;
        if (pos == 6) break;
      }
      CHECK(ms.score == best);
    }
  }
}

TEST_CASE("monroe rule maximizes the score, breaking ties toward low indices") {
  Election e9 = monroe9();
  auto out = monroe(e9, Quota::Hare);
  CHECK(out.committee == std::vector<int>{0, 1, 3});
  CHECK(out.trace.monroe_score == 8);

  Election full = parse_election("3 6 3\n0\n1\n2\n0,1\n1,2\n0,2\n");
  CHECK(monroe(full, Quota::Hare).committee == std::vector<int>{0, 1, 2});
}

TEST_CASE("greedy_monroe follows the published round structure") {
  Election e9 = monroe9();
  auto out = greedy_monroe(e9, Quota::Hare);
  CHECK(out.trace.selection_order == std::vector<int>{0, 1, 3});

  Election uni = parse_election("1 4 1\n0\n0\n0\n0\n");
  CHECK(greedy_monroe(uni, Quota::Hare).committee == std::vector<int>{0});
}

TEST_CASE("gcr selects maximal level then smallest target") {
  Election e = parse_election("2 3 1\n1\n1\n0\n");
  auto hare = gcr(e, Quota::Hare);
  CHECK(hare.trace.gcr_steps.empty());
  CHECK(hare.committee == std::vector<int>{0});
  auto droop = gcr(e, Quota::Droop);
  REQUIRE(droop.trace.gcr_steps.size() == 1);
  CHECK(droop.trace.gcr_steps[0].level == 1);
  CHECK(droop.trace.gcr_steps[0].target == std::vector<int>{1});
  CHECK(droop.committee == std::vector<int>{1});

  auto c1 = gcr(cor1(), Quota::Droop);
  CHECK(c1.committee.size() == 2);
  CHECK_FALSE(check(cor1(), c1.committee, Axiom::FJR, Quota::Droop));
}

TEST_CASE("rules fill their committees on random instances") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Election e = random_election(7, 11, 3, 0.4, derive_seed(37, seed));
    CHECK(gjcr(e, Quota::Hare).committee.size() == 3);
    CHECK(gjcr(e, Quota::Droop).committee.size() == 3);
    CHECK(gcr(e, Quota::Hare).committee.size() == 3);
    CHECK(gcr(e, Quota::Droop).committee.size() == 3);
    CHECK(monroe(e, Quota::Hare).committee.size() == 3);
    CHECK(monroe(e, Quota::Droop).committee.size() == 3);
    CHECK(greedy_monroe(e, Quota::Hare).committee.size() == 3);
    CHECK(greedy_monroe(e, Quota::Droop).committee.size() == 3);
    CHECK(mes_completed(e, Rational(1)).committee.size() == 3);
    CHECK(mes(e, droop_budget(e)).committee.size() <= 3);
  }
}

TEST_CASE("lexicographic runs are deterministic byte for byte") {
  Election e = random_election(7, 11, 3, 0.4, 99);
  auto a = mes_completed(e, droop_budget(e));
  auto b = mes_completed(e, droop_budget(e));
  CHECK(a.committee == b.committee);
  CHECK(a.trace.serialize() == b.trace.serialize());
  CHECK(gcr(e, Quota::Droop).trace.serialize() == gcr(e, Quota::Droop).trace.serialize());
}

TEST_CASE("scripted tie-breaking validates choices") {
  Election e = parse_election("3 6 1\n0,1\n0,1\n0,1\n0,1\n0,1\n2\n");
  // candidates 0 and 1 tie on approvals; script may pick either
  auto out = av(e, TieBreakPolicy::scripted({1}));
  CHECK(out.committee == std::vector<int>{1});
  CHECK_THROWS_AS(av(e, TieBreakPolicy::scripted({2})), std::runtime_error);
  CHECK_THROWS_AS(av(e, TieBreakPolicy::scripted({})), std::runtime_error);
}
