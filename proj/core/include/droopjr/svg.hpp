#pragma once

#include <string>
#include <vector>

#include "droopjr/experiment.hpp"

namespace droopjr {

// Renders satisfaction fractions as a grid of line charts in one standalone
// SVG document: experiments 1-2 facet by (model, p) with dispersion on the x
// axis, experiment 3 facets by (m, k) with p on the x axis; one polyline per
// axiom. Records must share one experiment id (std::invalid_argument
// otherwise); empty input yields an empty chart with axes.
std::string emit_plot(const std::vector<ExperimentRecord>& records);

}  // namespace droopjr
