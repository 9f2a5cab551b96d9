#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "droopjr/election.hpp"

namespace droopjr {

enum class Axiom { JR, PJR, EJR, PJRplus, EJRplus, FPJR, FJR };

inline constexpr std::array<Axiom, 7> kAllAxioms = {
    Axiom::JR,      Axiom::PJR,  Axiom::EJR, Axiom::PJRplus,
    Axiom::EJRplus, Axiom::FPJR, Axiom::FJR};

std::string axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(const std::string& name);

// A concrete demonstration that `committee` fails `axiom` under `quota`:
// a cohesion target T (a single candidate for JR / PJR+ / EJR+) and a voter
// group S. Witnesses re-verify against the raw definition.
struct ViolationWitness {
  Axiom axiom;
  Quota quota;
  int level;
  std::vector<int> target;
  std::vector<int> group;
  std::string note;

  std::string serialize() const;
};

// Returns nullopt iff `committee` provides the axiom; otherwise a witness with
// the largest violating level (targets tie-broken lexicographically). The
// exhaustive checkers (PJR, EJR, PJR+, FPJR, FJR) are guarded to m <= 24 and
// k <= 8 and throw when the instance is larger; JR and EJR+ are polynomial.
std::optional<ViolationWitness> check(const Election& e, const std::vector<int>& committee,
                                      Axiom axiom, Quota quota);

// Replays a witness against the definition, independent of check().
bool witness_revalidates(const Election& e, const std::vector<int>& committee,
                         const ViolationWitness& w);

// result[axiom][quota]; quota index 0 = Hare, 1 = Droop. Construction asserts
// the logical-strength lattice (e.g. an FJR pass can never coexist with an
// EJR violation) on the fresh results.
struct CheckMatrix {
  std::array<std::array<std::optional<ViolationWitness>, 2>, 7> result;

  const std::optional<ViolationWitness>& at(Axiom a, Quota q) const {
    return result[static_cast<int>(a)][q == Quota::Hare ? 0 : 1];
  }
};

CheckMatrix check_all(const Election& e, const std::vector<int>& committee);

}  // namespace droopjr
