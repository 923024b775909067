#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vvlab/core/grid.hpp"

namespace vvlab {

/// One real value per cell of a Grid1D.
struct ScalarField {
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(int n, double fill = 0.0) : values(static_cast<size_t>(n), fill) {}
  explicit ScalarField(std::vector<double> v) : values(std::move(v)) {}

  int size() const { return static_cast<int>(values.size()); }
  double& operator[](int j) { return values[static_cast<size_t>(j)]; }
  double operator[](int j) const { return values[static_cast<size_t>(j)]; }

  bool all_finite() const {
    return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
  }
};

/// Density / momentum pair. Invariant: rho >= 0 everywhere and m = 0 wherever rho = 0.
struct EulerState {
  ScalarField rho;
  ScalarField m;

  int size() const { return rho.size(); }
  /// Velocity with vacuum guard: u = m/rho, and 0 on vacuum cells.
  double velocity(int j) const { return rho[j] > 0.0 ? m[j] / rho[j] : 0.0; }
};

/// Zero out density below the floor (and the momentum with it).
inline void apply_vacuum_floor(EulerState& s, double floor) {
  for (int j = 0; j < s.size(); ++j) {
    if (s.rho[j] < floor) {
      s.rho[j] = 0.0;
      s.m[j] = 0.0;
    }
  }
}

inline void check_same_grid(const ScalarField& f, const ScalarField& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("fields do not share a grid (sizes " +
                                std::to_string(f.size()) + " vs " + std::to_string(g.size()) + ")");
}

/// Discrete L1 distance: spacing * sum |f_j - g_j|.
inline double l1_distance(const ScalarField& f, const ScalarField& g, const Grid1D& grid) {
  check_same_grid(f, g);
  if (f.size() != grid.n_cells) throw std::invalid_argument("l1_distance: field/grid size mismatch");
  double s = 0.0;
  for (int j = 0; j < f.size(); ++j) s += std::abs(f[j] - g[j]);
  return grid.spacing() * s;
}

inline double l1_norm(const ScalarField& f, const Grid1D& grid) {
  return l1_distance(f, ScalarField(f.size(), 0.0), grid);
}

/// Moving cell average with window [j-r, j+r], clipped at the boundary.
inline ScalarField local_average(const ScalarField& f, int window_radius) {
  if (window_radius < 1) throw std::invalid_argument("local_average: window_radius must be >= 1");
  const int n = f.size();
  std::vector<double> prefix(static_cast<size_t>(n) + 1, 0.0);
  for (int j = 0; j < n; ++j) prefix[j + 1] = prefix[j] + f[j];
  ScalarField out(n);
  for (int j = 0; j < n; ++j) {
    const int lo = std::max(0, j - window_radius);
    const int hi = std::min(n - 1, j + window_radius);
    out[j] = (prefix[hi + 1] - prefix[lo]) / (hi - lo + 1);
  }
  return out;
}

/// Values on a Grid2D, row-major in (i, j) = (x, y).
struct Field2D {
  int nx = 0, ny = 0;
  std::vector<double> values;

  Field2D() = default;
  Field2D(int nx_, int ny_, double fill = 0.0)
      : nx(nx_), ny(ny_), values(static_cast<size_t>(nx_) * ny_, fill) {}

  double& at(int i, int j) { return values[static_cast<size_t>(i) * ny + j]; }
  double at(int i, int j) const { return values[static_cast<size_t>(i) * ny + j]; }

  double max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

template <class F>
Field2D sample_field2d(const Grid2D& g, F&& fn) {
  Field2D f(g.nx, g.ny);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) f.at(i, j) = fn(g.x(i), g.y(j));
  return f;
}

/// Periodic moving average over a (2r+1)^2 window, used for weak-limit extraction.
inline Field2D local_average2d_periodic(const Field2D& f, int r) {
  if (r < 1) throw std::invalid_argument("local_average2d_periodic: radius must be >= 1");
  const int nx = f.nx, ny = f.ny;
  Field2D tmp(nx, ny), out(nx, ny);
  const double w = 1.0 / (2 * r + 1);
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      double s = 0.0;
      for (int k = -r; k <= r; ++k) s += f.at((i + k % nx + nx) % nx, j);
      tmp.at(i, j) = s * w;
    }
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      double s = 0.0;
      for (int k = -r; k <= r; ++k) s += tmp.at(i, (j + k % ny + ny) % ny);
      out.at(i, j) = s * w;
    }
  return out;
}

}  // namespace vvlab
