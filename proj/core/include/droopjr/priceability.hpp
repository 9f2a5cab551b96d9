#pragma once

#include <optional>
#include <string>
#include <vector>

#include "droopjr/election.hpp"

namespace droopjr {

// A price p > 0 together with per-voter payment functions. payments[i][c] is
// what voter i pays toward candidate c; a supporting system routes payments
// only from approvers to committee members, charges every seat exactly p, and
// leaves no outside candidate with supporter change exceeding p.
struct PriceSystem {
  Rational price;
  std::vector<std::vector<Rational>> payments;  // n x m

  std::string serialize() const;
};

// Searches for a supporting price system by maximizing p over the (linear)
// constraint polytope with an exact rational simplex; the committee is
// priceable iff the maximum is positive. W must be nonempty.
std::optional<PriceSystem> find_price_system(const Election& e,
                                             const std::vector<int>& committee);

// Replays every clause of the definition directly; independent of the solver.
bool verify_price_system(const Election& e, const std::vector<int>& committee,
                         const PriceSystem& ps);

}  // namespace droopjr
