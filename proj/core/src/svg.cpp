#include "droopjr/svg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace droopjr {
namespace {

constexpr int kFacetW = 250, kFacetH = 180;
constexpr int kPadL = 40, kPadR = 12, kPadT = 24, kPadB = 28;
constexpr int kLegendH = 24;

constexpr const char* kSeries[4] = {"JR", "Droop-JR", "EJR+", "Droop-EJR+"};
constexpr const char* kColor[4] = {"#1f77b4", "#2ca02c", "#ff7f0e", "#d62728"};

struct Fraction {
  long long yes = 0;
  long long total = 0;
};

std::string fmt(double v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

}  // namespace

std::string emit_plot(const std::vector<ExperimentRecord>& records) {
  int experiment = records.empty() ? 0 : records.front().experiment;
  for (const auto& r : records)
    if (r.experiment != experiment)
      throw std::invalid_argument("emit_plot: records mix experiment ids");
  bool by_p = experiment == 3;  // x axis carries p; facets carry (m, k)

  // facet key -> series -> x -> fraction
  std::map<std::pair<int, double>, std::array<std::map<double, Fraction>, 4>> facets;
  auto facet_key = [&](const ExperimentRecord& r) {
    return by_p ? std::make_pair(r.m, static_cast<double>(r.k))
                : std::make_pair(static_cast<int>(r.model), r.p);
  };
  for (const auto& r : records) {
    auto& f = facets[facet_key(r)];
    double x = by_p ? r.p : r.dispersion;
    bool vals[4] = {r.jr, r.droop_jr, r.ejrplus, r.droop_ejrplus};
    for (int s = 0; s < 4; ++s) {
      auto& cell = f[s][x];
      cell.yes += vals[s] ? 1 : 0;
      cell.total += 1;
    }
  }
  if (facets.empty()) facets[{0, 0.0}];  // empty chart, axes only

  std::map<int, int> row_of;
  std::map<double, int> col_of;
  for (const auto& [key, _] : facets) {
    row_of.emplace(key.first, 0);
    col_of.emplace(key.second, 0);
  }
  {
    int i = 0;
    for (auto& [k, v] : row_of) v = i++;
    i = 0;
    for (auto& [k, v] : col_of) v = i++;
  }
  int rows = static_cast<int>(row_of.size());
  int cols = static_cast<int>(col_of.size());
  int width = cols * kFacetW + 20;
  int height = rows * kFacetH + kLegendH + 20;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" font-family=\"sans-serif\" font-size=\"10\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  for (int s = 0; s < 4; ++s) {
    int lx = 10 + s * 110;
    svg << "<line x1=\"" << lx << "\" y1=\"12\" x2=\"" << lx + 18
        << "\" y2=\"12\" stroke=\"" << kColor[s] << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << lx + 22 << "\" y=\"15\">" << kSeries[s] << "</text>\n";
  }

  for (const auto& [key, series] : facets) {
    int ox = 10 + col_of[key.second] * kFacetW;
    int oy = kLegendH + 10 + row_of[key.first] * kFacetH;
    int px = ox + kPadL, py = oy + kPadT;
    int pw = kFacetW - kPadL - kPadR, ph = kFacetH - kPadT - kPadB;

    std::string title;
    if (!records.empty()) {
      title = by_p ? "m=" + std::to_string(key.first) + " k=" + fmt(key.second)
                   : model_name(static_cast<BallotModel>(key.first)) + " p=" + fmt(key.second);
    }
    svg << "<text x=\"" << px + pw / 2 << "\" y=\"" << oy + 14
        << "\" text-anchor=\"middle\">" << title << "</text>\n";
    // axes with unit y range and x range [0,1]
    svg << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << pw << "\" height=\""
        << ph << "\" fill=\"none\" stroke=\"#444\"/>\n";
    svg << "<text x=\"" << px - 4 << "\" y=\"" << py + 4
        << "\" text-anchor=\"end\">1</text>\n";
    svg << "<text x=\"" << px - 4 << "\" y=\"" << py + ph + 4
        << "\" text-anchor=\"end\">0</text>\n";
    svg << "<text x=\"" << px + pw / 2 << "\" y=\"" << py + ph + 16
        << "\" text-anchor=\"middle\">" << (by_p ? "p" : "phi / alpha") << "</text>\n";

    for (int s = 0; s < 4; ++s) {
      if (series[s].empty()) continue;
      std::ostringstream pts;
      for (const auto& [x, frac] : series[s]) {
        double fy = frac.total ? static_cast<double>(frac.yes) / frac.total : 0.0;
        double cx = px + x * pw;
        double cy = py + (1.0 - fy) * ph;
        pts << fmt(cx) << "," << fmt(cy) << " ";
      }
      svg << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << kColor[s]
          << "\" stroke-width=\"1.5\"/>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace droopjr
