#pragma once

#include <string>
#include <vector>

#include "droopjr/experiment.hpp"

namespace droopjr {

// One header row, one row per record, columns in ExperimentRecord field
// order, booleans as 0/1. parse_csv round-trips emit_csv exactly and rejects
// rows where a Droop verdict is true but the Hare verdict is false.
std::string emit_csv(const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> parse_csv(const std::string& text);

}  // namespace droopjr
