#include "doctest.h"
#include "droopjr/election.hpp"
#include "droopjr/sampling.hpp"

using namespace droopjr;

TEST_CASE("parse_election transcribes ballots in file order") {
  Election e = parse_election("3 2 1\n0\n1,2\n");
  CHECK(e.m() == 3);
  CHECK(e.n() == 2);
  CHECK(e.k() == 1);
  CHECK(set_to_indices(e.ballot(0)) == std::vector<int>{0});
  CHECK(set_to_indices(e.ballot(1)) == std::vector<int>{1, 2});
}

TEST_CASE("parse_election reads the seven-voter two-party instance") {
  Election e = parse_election("2 7 2\n0\n0\n0\n1\n1\n1\n1\n");
  CHECK(e.approval_count(0) == 3);
  CHECK(e.approval_count(1) == 4);
  CHECK(e.approvers(0) == std::vector<int>{0, 1, 2});
}

TEST_CASE("parse_election rejects bad input with line numbers") {
  CHECK_THROWS_WITH_AS(parse_election("2 2 3\n0\n1\n"),
                       doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS_AS(parse_election("3 2 1\n0\n5\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_election("3 2 0\n0\n1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_election(""), std::runtime_error);
  CHECK_THROWS_AS(parse_election("3 2 1\n0\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_election("3 2 1\n0\nx\n"), std::runtime_error);
}

TEST_CASE("parse_election skips comments and allows empty ballots") {
  Election e = parse_election("# header\n2 2 1\n\n# mid\n0,1\n");
  CHECK(e.ballot(0).none());
  CHECK(e.ballot(1).count() == 2);
}

TEST_CASE("parse after serialize is the identity") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    SamplerConfig cfg;
    cfg.model = BallotModel::ImpartialCulture;
    cfg.p = 0.4;
    cfg.m = 6;
    cfg.n = 9;
    cfg.seed = seed;
    Election e = sample_election(cfg, 3);
    Election back = parse_election(serialize_election(e));
    CHECK(back.m() == e.m());
    CHECK(back.k() == e.k());
    REQUIRE(back.n() == e.n());
    for (int i = 0; i < e.n(); ++i) CHECK(back.ballot(i) == e.ballot(i));
  }
}

TEST_CASE("quota thresholds at n=500, k=10") {
  Election e = parse_election("1 1 1\n0\n");  // n,k overridden below
  CHECK(group_clears_quota(Quota::Droop, 46, 1, 500, 10));
  CHECK_FALSE(group_clears_quota(Quota::Droop, 45, 1, 500, 10));
  CHECK(group_clears_quota(Quota::Hare, 50, 1, 500, 10));
  CHECK_FALSE(group_clears_quota(Quota::Hare, 49, 1, 500, 10));
  CHECK(group_clears_quota(Quota::Droop, 2, 1, 3, 1));
  (void)e;
}

TEST_CASE("Droop integer test equals the exact rational comparison") {
  for (int k = 1; k <= 20; ++k)
    for (int l = 1; l <= k; ++l)
      for (int n = 1; n <= 200; ++n)
        for (int s = 0; s <= n; ++s) {
          // s > l*n/(k+1) without rounding
          bool rational = Rational(s) > Rational(l) * n / (k + 1);
          CHECK(group_clears_quota(Quota::Droop, s, l, n, k) == rational);
          bool hare = Rational(s) >= Rational(l) * n / k;
          CHECK(group_clears_quota(Quota::Hare, s, l, n, k) == hare);
          // clearing the Hare bar always clears the Droop bar
          if (hare) CHECK(group_clears_quota(Quota::Droop, s, l, n, k));
        }
}

TEST_CASE("quota_report evaluates both formulas") {
  auto report = [](int m, int n, int k) {
    std::string text = std::to_string(m) + " " + std::to_string(n) + " " +
                       std::to_string(k) + "\n";
    for (int i = 0; i < n; ++i) text += "0\n";
    return quota_report(parse_election(text));
  };
  auto r1 = report(11, 500, 10);
  CHECK(r1.hare == Rational(50));
  CHECK(r1.droop == 46);
  auto r2 = report(11, 100, 10);
  CHECK(r2.hare == Rational(10));
  CHECK(r2.droop == 10);
  auto r3 = report(3, 7, 2);
  CHECK(r3.hare == make_rational(7, 2));
  CHECK(r3.droop == 3);
}

TEST_CASE("cohesive_group returns the maximal qualifying set") {
  Election e = parse_election("2 7 2\n0\n0\n0\n1\n1\n1\n1\n");
  VoterSet all(7);
  all.set();
  CandSet a = indices_to_set(2, {0});
  CHECK(set_to_indices(cohesive_group(e, a, 1, all, CohesionMode::Strict)) ==
        std::vector<int>{0, 1, 2});

  Election cor1 = parse_election("3 2 2\n0,1\n0,2\n");
  VoterSet both(2);
  both.set();
  CandSet t = indices_to_set(3, {1, 2});
  CHECK(cohesive_group(cor1, t, 1, both, CohesionMode::Weak).count() == 2);

  CHECK_THROWS_AS(cohesive_group(e, CandSet(2), 1, all, CohesionMode::Weak),
                  std::invalid_argument);
  CHECK_THROWS_AS(cohesive_group(e, a, 2, all, CohesionMode::Strict),
                  std::invalid_argument);
}

TEST_CASE("cohesive_group is monotone in the active set and strict matches weak") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    SamplerConfig cfg;
    cfg.model = BallotModel::ImpartialCulture;
    cfg.p = 0.5;
    cfg.m = 5;
    cfg.n = 8;
    cfg.seed = derive_seed(42, seed);
    Election e = sample_election(cfg, 2);
    Rng rng(seed);
    VoterSet all(8);
    all.set();
    VoterSet part(8);
    for (int i = 0; i < 8; ++i)
      if (rng.next() & 1) part.set(i);
    CandSet t = indices_to_set(5, {static_cast<int>(seed % 5), static_cast<int>((seed + 2) % 5)});
    if (t.count() != 2) continue;
    auto full = cohesive_group(e, t, 2, all, CohesionMode::Weak);
    auto sub = cohesive_group(e, t, 2, part, CohesionMode::Weak);
    CHECK(sub.is_subset_of(full));
    // With |T| = level, a voter qualifies strictly iff it contains all of T,
    // which is the weak condition restricted to supersets of T.
    auto strict = cohesive_group(e, t, 2, all, CohesionMode::Strict);
    VoterSet expect(8);
    for (int i = 0; i < 8; ++i)
      if (full.test(i) && t.is_subset_of(e.ballot(i))) expect.set(i);
    CHECK(strict == expect);
  }
}
