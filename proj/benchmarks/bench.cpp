#include <benchmark/benchmark.h>

#include "droopjr/axioms.hpp"
#include "droopjr/rules.hpp"
#include "droopjr/sampling.hpp"

namespace {

using namespace droopjr;

Election bench_election(int m, int n, int k, uint64_t seed) {
  SamplerConfig cfg;
  cfg.model = BallotModel::ImpartialCulture;
  cfg.p = 0.3;
  cfg.m = m;
  cfg.n = n;
  cfg.seed = seed;
  return sample_election(cfg, k);
}

void BM_JrCheck(benchmark::State& state) {
  Election e = bench_election(50, 500, 10, 1);
  auto committee = random_committee(50, 10, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(check(e, committee, Axiom::JR, Quota::Droop));
}
BENCHMARK(BM_JrCheck);

void BM_EjrPlusCheck(benchmark::State& state) {
  Election e = bench_election(50, 500, 10, 1);
  auto committee = random_committee(50, 10, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(check(e, committee, Axiom::EJRplus, Quota::Droop));
}
BENCHMARK(BM_EjrPlusCheck);

void BM_MesCompleted(benchmark::State& state) {
  Election e = bench_election(50, 500, 10, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(mes_completed(e, Rational(1)));
}
BENCHMARK(BM_MesCompleted);

void BM_LsPav(benchmark::State& state) {
  Election e = bench_election(12, 40, 5, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(ls_pav(e, default_ls_pav_epsilon(e)));
}
BENCHMARK(BM_LsPav);

void BM_MonroeScore(benchmark::State& state) {
  Election e = bench_election(12, 48, 3, 1);
  auto committee = random_committee(12, 3, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(monroe_score(e, committee, Quota::Droop));
}
BENCHMARK(BM_MonroeScore);

void BM_Sample(benchmark::State& state) {
  SamplerConfig cfg;
  cfg.model = BallotModel::TruncatedUrn;
  cfg.p = 0.4;
  cfg.dispersion = 0.3;
  cfg.m = 50;
  cfg.n = 500;
  cfg.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(sample(cfg));
}
BENCHMARK(BM_Sample);

}  // namespace

BENCHMARK_MAIN();
