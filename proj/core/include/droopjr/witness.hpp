#pragma once

#include <string>
#include <vector>

namespace droopjr {

struct WitnessResult {
  std::string name;
  bool passed;
  std::string detail;  // human-readable account of what was replayed
};

// Named counterexample scenarios. Each builds a fixed instance, runs the
// relevant rule with prescribed (possibly scripted) tie-breaking, and asserts
// the expected checker verdicts and scores; passed=false is a regression.
std::vector<std::string> witness_names();
WitnessResult run_witness(const std::string& name);  // std::out_of_range if unknown

}  // namespace droopjr
