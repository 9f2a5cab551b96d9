#pragma once

#include <boost/dynamic_bitset.hpp>

#include <string>
#include <vector>

#include "droopjr/rational.hpp"

namespace droopjr {

// Candidate sets are bitsets over {0..m-1}, voter sets are bitsets over
// {0..n-1}. Both aliases exist purely for readability.
using CandSet = boost::dynamic_bitset<>;
using VoterSet = boost::dynamic_bitset<>;

std::vector<int> set_to_indices(const boost::dynamic_bitset<>& s);
boost::dynamic_bitset<> indices_to_set(std::size_t universe, const std::vector<int>& idx);

// An approval election: m candidates, n voters, target committee size k.
// Immutable after construction; all operations on it are pure, so instances
// may be shared freely across threads.
class Election {
 public:
  Election(int m, int n, int k, std::vector<CandSet> ballots);

  int m() const { return m_; }
  int n() const { return n_; }
  int k() const { return k_; }
  const CandSet& ballot(int voter) const { return ballots_[voter]; }
  const std::vector<CandSet>& ballots() const { return ballots_; }
  // Voters approving candidate c, ascending.
  const std::vector<int>& approvers(int c) const { return approvers_[c]; }
  int approval_count(int c) const { return static_cast<int>(approvers_[c].size()); }

 private:
  int m_, n_, k_;
  std::vector<CandSet> ballots_;
  std::vector<std::vector<int>> approvers_;
};

// Election file format: line 1 "m n k"; then n ballot lines, each a
// comma-separated ascending list of candidate indices (empty line = empty
// ballot). Lines starting with '#' are ignored. Parse errors name the line.
Election parse_election(const std::string& text);
std::string serialize_election(const Election& e);

enum class Quota { Hare, Droop };

std::string quota_name(Quota q);

// Exact integer form of the group-size tests:
//   Hare:  k*|S| >= l*n        (|S| >= l*n/k)
//   Droop: (k+1)*|S| >= l*n+1  (|S| > l*n/(k+1))
bool group_clears_quota(Quota q, long long group_size, long long level, long long n,
                        long long k);
bool group_clears_quota(Quota q, long long group_size, long long level, const Election& e);

struct QuotaReport {
  Rational hare;    // n/k
  long long droop;  // floor(n/(k+1)) + 1
};
QuotaReport quota_report(const Election& e);

enum class CohesionMode { Strict, Weak };

// Maximal S subseteq active with T subseteq A_i (strict; requires |T| = level)
// or |A_i cap T| >= level (weak) for every i in S. Any qualifying group is a
// subset of the returned set.
VoterSet cohesive_group(const Election& e, const CandSet& target, int level,
                        const VoterSet& active, CohesionMode mode);

}  // namespace droopjr
