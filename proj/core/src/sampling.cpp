#include "droopjr/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace droopjr {

uint64_t Rng::next() {
  state += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double Rng::next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

int Rng::next_below(int bound) {
  if (bound <= 0) throw std::invalid_argument("Rng: nonpositive bound");
  uint64_t b = static_cast<uint64_t>(bound);
  uint64_t limit = UINT64_MAX - UINT64_MAX % b;
  uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return static_cast<int>(v % b);
}

std::vector<int> Rng::permutation(int m) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  for (int i = m - 1; i > 0; --i) std::swap(p[i], p[next_below(i + 1)]);
  return p;
}

uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b) {
  Rng r(master);
  r.state ^= r.next() + a;
  r.state ^= r.next() + b;
  return r.next();
}

std::string model_name(BallotModel m) {
  switch (m) {
    case BallotModel::Resampling: return "resampling";
    case BallotModel::Noise: return "noise";
    case BallotModel::TruncatedUrn: return "urn";
    case BallotModel::ImpartialCulture: return "ic";
  }
  return "?";
}

std::optional<BallotModel> model_from_name(const std::string& name) {
  if (name == "resampling") return BallotModel::Resampling;
  if (name == "noise") return BallotModel::Noise;
  if (name == "urn") return BallotModel::TruncatedUrn;
  if (name == "ic") return BallotModel::ImpartialCulture;
  return std::nullopt;
}

namespace {

void validate(const SamplerConfig& cfg) {
  if (cfg.m <= 0 || cfg.n <= 0) throw std::invalid_argument("sample: m and n must be positive");
  if (cfg.p < 0.0 || cfg.p > 1.0) throw std::invalid_argument("sample: p outside [0,1]");
  if (cfg.model != BallotModel::ImpartialCulture &&
      (cfg.dispersion <= 0.0 || cfg.dispersion > 1.0))
    throw std::invalid_argument("sample: dispersion outside (0,1]");
}

CandSet central_ballot(int m, double p) {
  // floor(p*m) approvals on the lowest-index candidates
  int size = static_cast<int>(std::floor(p * m));
  CandSet b(m);
  for (int c = 0; c < size; ++c) b.set(c);
  return b;
}

CandSet ic_ballot(Rng& rng, int m, double p) {
  CandSet b(m);
  for (int c = 0; c < m; ++c)
    if (rng.next_double() < p) b.set(c);
  return b;
}

}  // namespace

std::vector<CandSet> sample(const SamplerConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  std::vector<CandSet> ballots;
  ballots.reserve(cfg.n);

  switch (cfg.model) {
    case BallotModel::ImpartialCulture: {
      for (int i = 0; i < cfg.n; ++i) ballots.push_back(ic_ballot(rng, cfg.m, cfg.p));
      break;
    }
    case BallotModel::Resampling: {
      CandSet central = central_ballot(cfg.m, cfg.p);
      for (int i = 0; i < cfg.n; ++i) {
        if (cfg.per_candidate_resampling) {
          CandSet b(cfg.m);
          for (int c = 0; c < cfg.m; ++c) {
            bool bit = rng.next_double() < cfg.dispersion ? central.test(c)
                                                          : rng.next_double() < cfg.p;
            if (bit) b.set(c);
          }
          ballots.push_back(std::move(b));
        } else {
          ballots.push_back(rng.next_double() < cfg.dispersion ? central
                                                               : ic_ballot(rng, cfg.m, cfg.p));
        }
      }
      break;
    }
    case BallotModel::Noise: {
      // Flipping each central bit independently with probability phi/(1+phi)
      // gives Pr[ballot] proportional to phi^(Hamming distance).
      CandSet central = central_ballot(cfg.m, cfg.p);
      double flip = cfg.dispersion / (1.0 + cfg.dispersion);
      for (int i = 0; i < cfg.n; ++i) {
        CandSet b = central;
        for (int c = 0; c < cfg.m; ++c)
          if (rng.next_double() < flip) b.flip(c);
        ballots.push_back(std::move(b));
      }
      break;
    }
    case BallotModel::TruncatedUrn: {
      // Polya urn over the m! rankings: after r draws a fresh uniform
      // permutation has probability 1/(1+r*alpha), otherwise a uniformly
      // chosen previous draw repeats. Ballots approve the first ceil(p*m)
      // ranked candidates.
      int take = static_cast<int>(std::ceil(cfg.p * cfg.m));
      std::vector<std::vector<int>> history;
      for (int i = 0; i < cfg.n; ++i) {
        double fresh_prob = 1.0 / (1.0 + static_cast<double>(i) * cfg.dispersion);
        if (history.empty() || rng.next_double() < fresh_prob) {
          history.push_back(rng.permutation(cfg.m));
        } else {
          history.push_back(history[rng.next_below(static_cast<int>(history.size()))]);
        }
        CandSet b(cfg.m);
        for (int r = 0; r < take; ++r) b.set(history.back()[r]);
        ballots.push_back(std::move(b));
      }
      break;
    }
  }
  return ballots;
}

Election sample_election(const SamplerConfig& cfg, int k) {
  return Election(cfg.m, cfg.n, k, sample(cfg));
}

std::vector<int> random_committee(int m, int k, uint64_t seed) {
  if (k > m) throw std::invalid_argument("random_committee: k > m");
  Rng rng(seed);
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.next_below(m - i)]);
  std::vector<int> committee(pool.begin(), pool.begin() + k);
  std::sort(committee.begin(), committee.end());
  return committee;
}

}  // namespace droopjr
