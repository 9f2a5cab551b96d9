#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "droopjr/election.hpp"

namespace droopjr {

// Portable deterministic generator (splitmix64: add the golden-gamma constant,
// then two xor-shift-multiply mixing rounds). Identical streams on every
// platform; doubles take the top 53 bits.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next();
  double next_double();             // uniform in [0,1)
  int next_below(int bound);        // uniform in [0,bound), rejection sampled
  std::vector<int> permutation(int m);
};

// Derives an independent child seed; chaining the indices reproduces parallel
// runs serially.
uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b = 0);

enum class BallotModel { Resampling, Noise, TruncatedUrn, ImpartialCulture };

std::string model_name(BallotModel m);
std::optional<BallotModel> model_from_name(const std::string& name);

struct SamplerConfig {
  BallotModel model;
  double p = 0.5;           // approval-set size parameter, in [0,1]
  double dispersion = 0.5;  // phi (resampling/noise) or alpha (urn), in (0,1]
  int m = 0;
  int n = 0;
  uint64_t seed = 0;
  // Resampling draws whole fresh ballots by default; this switches to
  // keeping/resampling each candidate bit independently.
  bool per_candidate_resampling = false;
};

// n approval ballots over m candidates, deterministic per cfg.
std::vector<CandSet> sample(const SamplerConfig& cfg);

Election sample_election(const SamplerConfig& cfg, int k);

// Uniform size-k subset of {0..m-1} (partial Fisher-Yates), ascending.
std::vector<int> random_committee(int m, int k, uint64_t seed);

}  // namespace droopjr
