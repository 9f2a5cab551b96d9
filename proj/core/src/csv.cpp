#include "droopjr/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace droopjr {
namespace {

constexpr const char* kHeader =
    "experiment,model,p,dispersion,m,n,k,rep,source,jr,droop_jr,ejrplus,droop_ejrplus,seed";

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

bool parse_bool(const std::string& s, size_t row) {
  if (s == "0") return false;
  if (s == "1") return true;
  throw std::runtime_error("csv parse error at row " + std::to_string(row) +
                           ": boolean must be 0 or 1, got '" + s + "'");
}

}  // namespace

std::string emit_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << kHeader << "\n";
  for (const auto& r : records) {
    out << r.experiment << ',' << model_name(r.model) << ',' << fmt_double(r.p) << ','
        << fmt_double(r.dispersion) << ',' << r.m << ',' << r.n << ',' << r.k << ','
        << r.rep << ',' << r.source << ',' << (r.jr ? 1 : 0) << ',' << (r.droop_jr ? 1 : 0)
        << ',' << (r.ejrplus ? 1 : 0) << ',' << (r.droop_ejrplus ? 1 : 0) << ',' << r.seed
        << "\n";
  }
  return out.str();
}

std::vector<ExperimentRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader)
    throw std::runtime_error("csv parse error: bad or missing header");

  std::vector<ExperimentRecord> records;
  size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    auto f = split_fields(line);
    if (f.size() != 14)
      throw std::runtime_error("csv parse error at row " + std::to_string(row) +
                               ": expected 14 fields, got " + std::to_string(f.size()));
    ExperimentRecord r;
    try {
      r.experiment = std::stoi(f[0]);
      auto model = model_from_name(f[1]);
      if (!model) throw std::runtime_error("unknown model '" + f[1] + "'");
      r.model = *model;
      r.p = std::stod(f[2]);
      r.dispersion = std::stod(f[3]);
      r.m = std::stoi(f[4]);
      r.n = std::stoi(f[5]);
      r.k = std::stoi(f[6]);
      r.rep = std::stoi(f[7]);
      r.source = f[8];
      r.jr = parse_bool(f[9], row);
      r.droop_jr = parse_bool(f[10], row);
      r.ejrplus = parse_bool(f[11], row);
      r.droop_ejrplus = parse_bool(f[12], row);
      r.seed = std::stoull(f[13]);
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("csv parse error at row " + std::to_string(row) +
                               ": malformed numeric field");
    }
    if ((r.droop_jr && !r.jr) || (r.droop_ejrplus && !r.ejrplus))
      throw std::runtime_error("csv parse error at row " + std::to_string(row) +
                               ": Droop verdict true with Hare verdict false");
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace droopjr
