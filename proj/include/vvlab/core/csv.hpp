#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "vvlab/core/run_record.hpp"

namespace vvlab {

/// 17 significant digits: enough for bit-faithful double round trips.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

/// Snapshot CSV: header `t,x,<field names>`, one row per (snapshot, cell).
inline std::string snapshots_to_csv(const RunRecord& run) {
  std::ostringstream os;
  os << "t,x";
  for (const auto& n : run.field_names) os << ',' << n;
  os << '\n';
  for (const auto& snap : run.snapshots) {
    for (int j = 0; j < run.grid.n_cells; ++j) {
      os << fmt17(snap.t) << ',' << fmt17(run.grid.center(j));
      for (const auto& f : snap.fields) os << ',' << fmt17(f[j]);
      os << '\n';
    }
  }
  return os.str();
}

/// Monitor series CSV: `t,value[,bound,verdict]`.
inline std::string series_to_csv(const MonitorSeries& s) {
  std::ostringstream os;
  const bool has_verdicts = !s.verdicts.empty();
  os << "t,value";
  if (s.bound) os << ",bound";
  if (has_verdicts) os << ",verdict";
  os << '\n';
  for (size_t i = 0; i < s.times.size(); ++i) {
    os << fmt17(s.times[i]) << ',' << fmt17(s.values[i]);
    if (s.bound) os << ',' << fmt17(*s.bound);
    if (has_verdicts) os << ',' << (s.verdicts[i] ? "pass" : "fail");
    os << '\n';
  }
  return os.str();
}

}  // namespace vvlab
