#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "droopjr/sampling.hpp"

namespace droopjr {

// One Monte-Carlo repetition: the sampled election's parameters, the committee
// source, and the four axiom verdicts. droop_* true implies the Hare column
// is true; construction and CSV ingestion both enforce this.
struct ExperimentRecord {
  int experiment;
  BallotModel model;
  double p;
  double dispersion;  // phi (resampling/noise), alpha (urn), 0 for IC
  int m, n, k;
  int rep;
  std::string source;  // "random" or "mes"
  bool jr, droop_jr, ejrplus, droop_ejrplus;
  uint64_t seed;

  bool operator==(const ExperimentRecord&) const = default;
};

// Experiment grids. scale=1 is the full setting: experiments 1 and 2 use
// n=500, m=50, k=10, p in {0.2,0.4,0.6,0.8}, dispersion 0.01..1.00 step 0.01,
// 400 repetitions; experiment 3 uses n=100, m in {50,100,200}, k in 1..9,
// p 0.01..1.00 step 0.01, 500 repetitions. Any other scale multiplies the
// repetition counts and coarsens the 0.01 grids to step 0.05; the default
// desk scale of 1/8 gives 50 repetitions.
struct GridConfig {
  int experiment = 1;
  double scale = 0.125;
  int workers = 0;  // 0 = hardware concurrency
  uint64_t seed = 1;
  bool bare_mes = false;  // experiment 2: skip the completion phase
};

// Runs every (grid point, repetition) cell; deterministic for a given seed
// regardless of worker count (records are indexed, not raced). Experiment 2
// asserts that its committees satisfy Hare JR and EJR+ and throws
// std::logic_error otherwise.
std::vector<ExperimentRecord> run_experiment(const GridConfig& cfg);

}  // namespace droopjr
