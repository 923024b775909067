#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace vvlab {

/// Uniform cell-centered 1D grid. Cell j is centered at x_min + (j + 1/2) * spacing.
struct Grid1D {
  double x_min = 0.0;
  double x_max = 1.0;
  int n_cells = 4;

  double spacing() const { return (x_max - x_min) / n_cells; }
  double center(int j) const { return x_min + (j + 0.5) * spacing(); }
  double length() const { return x_max - x_min; }

  bool operator==(const Grid1D&) const = default;
};

inline Grid1D make_grid(double x_min, double x_max, int n_cells) {
  if (!(x_min < x_max))
    throw std::invalid_argument("make_grid: x_min must be < x_max (got " +
                                std::to_string(x_min) + ", " + std::to_string(x_max) + ")");
  if (n_cells < 4)
    throw std::invalid_argument("make_grid: n_cells must be >= 4 (got " +
                                std::to_string(n_cells) + ")");
  if (!std::isfinite(x_min) || !std::isfinite(x_max))
    throw std::invalid_argument("make_grid: bounds must be finite");
  return Grid1D{x_min, x_max, n_cells};
}

/// Uniform 2D grid; per-axis periodicity. Periodic axes sample x0 + i*dx with
/// dx = L/n (no duplicated endpoint); non-periodic axes are node grids including
/// both endpoints with dx = L/(n-1).
struct Grid2D {
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
  int nx = 4, ny = 4;
  bool periodic_x = false;
  bool periodic_y = false;

  double dx() const { return periodic_x ? (x1 - x0) / nx : (x1 - x0) / (nx - 1); }
  double dy() const { return periodic_y ? (y1 - y0) / ny : (y1 - y0) / (ny - 1); }
  double x(int i) const { return x0 + i * dx(); }
  double y(int j) const { return y0 + j * dy(); }

  bool operator==(const Grid2D&) const = default;
};

inline Grid2D make_grid2d(double x0, double x1, double y0, double y1, int nx, int ny,
                          bool periodic_x = false, bool periodic_y = false) {
  if (!(x0 < x1) || !(y0 < y1)) throw std::invalid_argument("make_grid2d: bounds must be ordered");
  if (nx < 4 || ny < 4) throw std::invalid_argument("make_grid2d: counts must be >= 4");
  return Grid2D{x0, x1, y0, y1, nx, ny, periodic_x, periodic_y};
}

}  // namespace vvlab
