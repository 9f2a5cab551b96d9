#include "droopjr/election.hpp"

#include <sstream>
#include <stdexcept>

namespace droopjr {

std::vector<int> set_to_indices(const boost::dynamic_bitset<>& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != boost::dynamic_bitset<>::npos; i = s.find_next(i))
    out.push_back(static_cast<int>(i));
  return out;
}

boost::dynamic_bitset<> indices_to_set(std::size_t universe, const std::vector<int>& idx) {
  boost::dynamic_bitset<> s(universe);
  for (int i : idx) {
    if (i < 0 || static_cast<std::size_t>(i) >= universe)
      throw std::invalid_argument("index out of range");
    s.set(static_cast<std::size_t>(i));
  }
  return s;
}

Election::Election(int m, int n, int k, std::vector<CandSet> ballots)
    : m_(m), n_(n), k_(k), ballots_(std::move(ballots)) {
  if (m < 1) throw std::invalid_argument("election: need at least one candidate");
  if (n < 1) throw std::invalid_argument("election: need at least one voter");
  if (k < 1 || k > m) throw std::invalid_argument("election: require 1 <= k <= m");
  if (static_cast<int>(ballots_.size()) != n)
    throw std::invalid_argument("election: ballot count != n");
  for (const auto& b : ballots_)
    if (static_cast<int>(b.size()) != m)
      throw std::invalid_argument("election: ballot over wrong candidate universe");
  approvers_.resize(m_);
  for (int i = 0; i < n_; ++i)
    for (auto c = ballots_[i].find_first(); c != CandSet::npos; c = ballots_[i].find_next(c))
      approvers_[c].push_back(i);
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw std::runtime_error("election parse error at line " + std::to_string(line) + ": " + what);
}

}  // namespace

Election parse_election(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int m = -1, n = -1, k = -1;
  std::vector<CandSet> ballots;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    if (m < 0) {
      std::istringstream hdr(line);
      if (!(hdr >> m >> n >> k)) parse_fail(lineno, "malformed header, expected 'm n k'");
      std::string rest;
      if (hdr >> rest) parse_fail(lineno, "trailing tokens in header");
      if (m < 1) parse_fail(lineno, "m must be positive");
      if (n < 1) parse_fail(lineno, "n must be positive");
      if (k < 1) parse_fail(lineno, "k must be at least 1");
      if (k > m) parse_fail(lineno, "k exceeds candidate count");
      continue;
    }
    if (static_cast<int>(ballots.size()) == n) {
      if (line.empty()) continue;  // tolerate trailing blank lines
      parse_fail(lineno, "more ballot lines than voters");
    }
    CandSet b(m);
    if (!line.empty()) {
      std::istringstream bs(line);
      std::string tok;
      while (std::getline(bs, tok, ',')) {
        std::size_t pos = 0;
        int c;
        try {
          c = std::stoi(tok, &pos);
        } catch (const std::exception&) {
          parse_fail(lineno, "bad candidate index '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) parse_fail(lineno, "bad candidate index '" + tok + "'");
        if (c < 0 || c >= m) parse_fail(lineno, "candidate index " + std::to_string(c) + " out of range");
        b.set(c);
      }
    }
    ballots.push_back(std::move(b));
  }
  if (m < 0) throw std::runtime_error("election parse error: empty input");
  if (static_cast<int>(ballots.size()) != n)
    throw std::runtime_error("election parse error: expected " + std::to_string(n) +
                             " ballots, found " + std::to_string(ballots.size()));
  return Election(m, n, k, std::move(ballots));
}

std::string serialize_election(const Election& e) {
  std::ostringstream out;
  out << e.m() << ' ' << e.n() << ' ' << e.k() << '\n';
  for (int i = 0; i < e.n(); ++i) {
    bool first = true;
    for (int c : set_to_indices(e.ballot(i))) {
      if (!first) out << ',';
      out << c;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string quota_name(Quota q) { return q == Quota::Hare ? "hare" : "droop"; }

bool group_clears_quota(Quota q, long long group_size, long long level, long long n,
                        long long k) {
  if (level < 1) throw std::invalid_argument("quota: level must be >= 1");
  if (group_size < 0 || group_size > n) throw std::invalid_argument("quota: bad group size");
  if (q == Quota::Hare) return k * group_size >= level * n;
  return (k + 1) * group_size >= level * n + 1;
}

bool group_clears_quota(Quota q, long long group_size, long long level, const Election& e) {
  return group_clears_quota(q, group_size, level, e.n(), e.k());
}

QuotaReport quota_report(const Election& e) {
  return QuotaReport{make_rational(e.n(), e.k()), e.n() / (e.k() + 1) + 1};
}

VoterSet cohesive_group(const Election& e, const CandSet& target, int level,
                        const VoterSet& active, CohesionMode mode) {
  if (level < 1) throw std::invalid_argument("cohesive_group: level must be >= 1");
  if (target.none()) throw std::invalid_argument("cohesive_group: empty target set");
  if (mode == CohesionMode::Strict && static_cast<int>(target.count()) != level)
    throw std::invalid_argument("cohesive_group: strict mode requires |T| = level");
  VoterSet out(e.n());
  for (auto i = active.find_first(); i != VoterSet::npos; i = active.find_next(i)) {
    const CandSet& b = e.ballot(static_cast<int>(i));
    if (mode == CohesionMode::Strict) {
      if (target.is_subset_of(b)) out.set(i);
    } else {
      if (static_cast<int>((b & target).count()) >= level) out.set(i);
    }
  }
  return out;
}

}  // namespace droopjr
