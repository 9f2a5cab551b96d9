#include "droopjr/experiment.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "droopjr/axioms.hpp"
#include "droopjr/rules.hpp"

namespace droopjr {
namespace {

struct GridPoint {
  BallotModel model;
  double p;
  double dispersion;
  int m, n, k;
};

std::vector<double> percent_grid(double scale) {
  int step = scale == 1.0 ? 1 : 5;
  std::vector<double> g;
  for (int v = step; v <= 100; v += step) g.push_back(static_cast<double>(v) / 100.0);
  return g;
}

int scaled_reps(int base, double scale) {
  int reps = static_cast<int>(base * scale + 0.5);
  return reps < 0 ? 0 : reps;
}

std::vector<GridPoint> make_grid(const GridConfig& cfg) {
  std::vector<GridPoint> grid;
  if (cfg.experiment == 1 || cfg.experiment == 2) {
    for (BallotModel model :
         {BallotModel::Resampling, BallotModel::Noise, BallotModel::TruncatedUrn})
      for (double p : {0.2, 0.4, 0.6, 0.8})
        for (double d : percent_grid(cfg.scale))
          grid.push_back({model, p, d, 50, 500, 10});
  } else if (cfg.experiment == 3) {
    for (int m : {50, 100, 200})
      for (int k = 1; k <= 9; ++k)
        for (double p : percent_grid(cfg.scale))
          grid.push_back({BallotModel::ImpartialCulture, p, 0.0, m, 100, k});
  } else {
    throw std::invalid_argument("run_experiment: experiment id must be 1, 2 or 3");
  }
  return grid;
}

ExperimentRecord run_cell(const GridConfig& cfg, const GridPoint& gp, int rep,
                          uint64_t cell_seed) {
  SamplerConfig sc;
  sc.model = gp.model;
  sc.p = gp.p;
  sc.dispersion = gp.model == BallotModel::ImpartialCulture ? 0.5 : gp.dispersion;
  sc.m = gp.m;
  sc.n = gp.n;
  sc.seed = derive_seed(cell_seed, 0);
  Election e = sample_election(sc, gp.k);

  std::vector<int> committee;
  std::string source;
  if (cfg.experiment == 2) {
    source = "mes";
    TieBreakPolicy tie = TieBreakPolicy::lexicographic();
    RuleOutcome out = cfg.bare_mes ? mes(e, Rational(1), SharesVariant::MES, tie)
                                   : mes_completed(e, Rational(1), SharesVariant::MES, tie);
    committee = out.committee;
  } else {
    source = "random";
    committee = random_committee(gp.m, gp.k, derive_seed(cell_seed, 1));
  }

  ExperimentRecord r;
  r.experiment = cfg.experiment;
  r.model = gp.model;
  r.p = gp.p;
  r.dispersion = gp.dispersion;
  r.m = gp.m;
  r.n = gp.n;
  r.k = gp.k;
  r.rep = rep;
  r.source = source;
  r.seed = cell_seed;
  r.jr = !check(e, committee, Axiom::JR, Quota::Hare);
  r.droop_jr = !check(e, committee, Axiom::JR, Quota::Droop);
  r.ejrplus = !check(e, committee, Axiom::EJRplus, Quota::Hare);
  r.droop_ejrplus = !check(e, committee, Axiom::EJRplus, Quota::Droop);

  if ((r.droop_jr && !r.jr) || (r.droop_ejrplus && !r.ejrplus))
    throw std::logic_error("run_experiment: Droop verdict passed where Hare failed");
  if (cfg.experiment == 2 && !cfg.bare_mes && (!r.jr || !r.ejrplus))
    throw std::logic_error("run_experiment: equal-shares committee failed a Hare axiom");
  return r;
}

}  // namespace

std::vector<ExperimentRecord> run_experiment(const GridConfig& cfg) {
  const std::vector<GridPoint> grid = make_grid(cfg);
  const int reps = scaled_reps(cfg.experiment == 3 ? 500 : 400, cfg.scale);
  const size_t total = grid.size() * static_cast<size_t>(reps);
  std::vector<ExperimentRecord> records(total);

  int workers = cfg.workers > 0 ? cfg.workers
                                : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  std::atomic<size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr error;

  auto work = [&] {
    while (true) {
      size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      size_t point = idx / reps;
      int rep = static_cast<int>(idx % reps);
      try {
        // The seed depends only on (seed, grid point, repetition), so any
        // worker count produces the same record at the same index.
        records[idx] = run_cell(cfg, grid[point], rep, derive_seed(cfg.seed, point, rep));
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!error) error = std::current_exception();
        next.store(total);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return records;
}

}  // namespace droopjr
