#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vvlab/core/field.hpp"
#include "vvlab/core/grid.hpp"
#include "vvlab/gas/gas_model.hpp"

namespace vvlab {

enum class SystemTag { scalar, euler_artificial, navier_stokes, spherical };

inline std::string to_string(SystemTag t) {
  switch (t) {
    case SystemTag::scalar: return "scalar";
    case SystemTag::euler_artificial: return "euler_artificial";
    case SystemTag::navier_stokes: return "navier_stokes";
    case SystemTag::spherical: return "spherical";
  }
  return "?";
}

/// Named time series with an optional declared bound and per-sample verdicts.
struct MonitorSeries {
  std::string name;
  std::vector<double> times;
  std::vector<double> values;
  std::optional<double> bound;            // declared bound, when one exists
  std::vector<bool> verdicts;             // empty when the series carries no per-sample check
  bool passed = true;
  std::optional<double> first_violation_t;

  void push(double t, double v) {
    times.push_back(t);
    values.push_back(v);
  }
  void push_verdict(double t, double v, bool ok) {
    push(t, v);
    verdicts.push_back(ok);
    if (!ok && passed) {
      passed = false;
      first_violation_t = t;
    }
  }
  double sup() const {
    double s = -1e300;
    for (double v : values) s = std::max(s, v);
    return s;
  }
  double last() const { return values.empty() ? 0.0 : values.back(); }
};

/// One saved state: every field column at one time.
struct Snapshot {
  double t = 0.0;
  std::vector<ScalarField> fields;  // parallel to RunRecord::field_names
};

struct BreakdownInfo {
  bool broken = false;
  double t = 0.0;
  std::string what;
};

/// Complete trajectory of one solve: snapshots at scheduled times, per-step
/// monitor series, and enough metadata to rerun and to post-process.
struct RunRecord {
  SystemTag tag = SystemTag::scalar;
  GasModel gas;
  std::string flux_name;  // scalar systems
  double eps = 0.0;
  Grid1D grid;
  int dim = 3;  // spherical systems

  std::vector<std::string> field_names;  // {"u"} or {"rho","m"}
  std::vector<Snapshot> snapshots;
  std::map<std::string, MonitorSeries> step_series;  // recorded every accepted step
  std::map<std::string, std::string> metadata;
  BreakdownInfo breakdown;

  bool is_gas() const { return tag != SystemTag::scalar; }

  const Snapshot& initial() const { return snapshots.front(); }
  const Snapshot& final() const { return snapshots.back(); }

  EulerState gas_state(int k) const {
    if (!is_gas()) throw std::logic_error("gas_state on a scalar run");
    return EulerState{snapshots[k].fields[0], snapshots[k].fields[1]};
  }
  const ScalarField& scalar_state(int k) const { return snapshots[k].fields[0]; }

  void validate() const {
    for (size_t k = 1; k < snapshots.size(); ++k)
      if (!(snapshots[k].t > snapshots[k - 1].t))
        throw std::logic_error("RunRecord: snapshot times not strictly increasing");
    for (const auto& s : snapshots)
      for (const auto& f : s.fields)
        if (!f.all_finite()) throw std::logic_error("RunRecord: non-finite snapshot");
  }
};

/// Strictly decreasing positive viscosity schedule plus a label for reports.
struct SweepSpec {
  std::vector<double> eps_values;

  void validate() const {
    if (eps_values.empty()) throw std::invalid_argument("sweep: epsilon list is empty");
    for (size_t i = 0; i < eps_values.size(); ++i) {
      if (!(eps_values[i] > 0.0)) throw std::invalid_argument("sweep: epsilon values must be > 0");
      if (i > 0 && !(eps_values[i] < eps_values[i - 1]))
        throw std::invalid_argument("sweep: epsilon list must be strictly decreasing");
    }
  }
};

}  // namespace vvlab
