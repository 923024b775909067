#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vvlab/core/expr.hpp"
#include "vvlab/core/field.hpp"
#include "vvlab/core/grid.hpp"

namespace vvlab {

/// Initial-data recipe for one scalar unknown: a two-state (Riemann) pair split
/// at an interface, a closed-form expression of x, a constant, or a table.
/// A positive smoothing width replaces the sharp split by a tanh transition.
struct InitialDataSpec {
  enum class Kind { constant, riemann, expression, table, tanh_profile };
  Kind kind = Kind::constant;

  double constant = 0.0;

  double left = 0.0, right = 0.0;
  double interface_x = 0.0;
  double smoothing = 0.0;  // 0 = sharp split

  std::string expression;  // f(x)

  std::vector<double> table;

  static InitialDataSpec make_constant(double c) {
    InitialDataSpec s;
    s.kind = Kind::constant;
    s.constant = c;
    return s;
  }
  static InitialDataSpec make_riemann(double l, double r, double x0, double width = 0.0) {
    InitialDataSpec s;
    s.kind = Kind::riemann;
    s.left = l;
    s.right = r;
    s.interface_x = x0;
    s.smoothing = width;
    return s;
  }
  static InitialDataSpec make_expression(std::string e) {
    InitialDataSpec s;
    s.kind = Kind::expression;
    s.expression = std::move(e);
    return s;
  }
  static InitialDataSpec make_table(std::vector<double> v) {
    InitialDataSpec s;
    s.kind = Kind::table;
    s.table = std::move(v);
    return s;
  }
  /// Monotone tanh transition from `left` to `right` centered at interface_x,
  /// with transition width `smoothing`.
  static InitialDataSpec make_tanh(double l, double r, double x0, double width) {
    InitialDataSpec s;
    s.kind = Kind::tanh_profile;
    s.left = l;
    s.right = r;
    s.interface_x = x0;
    s.smoothing = width;
    return s;
  }

  double eval(double x) const {
    switch (kind) {
      case Kind::constant: return constant;
      case Kind::riemann:
        if (smoothing > 0.0) return eval_tanh(x);
        return x < interface_x ? left : right;
      case Kind::tanh_profile: return eval_tanh(x);
      case Kind::expression: return Expr::parse(expression).eval_x(x);
      case Kind::table: throw std::logic_error("table spec has no pointwise evaluation");
    }
    return 0.0;
  }

 private:
  double eval_tanh(double x) const {
    const double mid = 0.5 * (left + right);
    const double half = 0.5 * (left - right);
    return mid + half * std::tanh((interface_x - x) / smoothing);
  }
};

/// Midpoint projection of an initial-data spec onto the cells of a grid.
inline ScalarField project_initial_data(const InitialDataSpec& spec, const Grid1D& grid) {
  ScalarField f(grid.n_cells);
  if (spec.kind == InitialDataSpec::Kind::table) {
    if (static_cast<int>(spec.table.size()) != grid.n_cells)
      throw std::invalid_argument("project_initial_data: table has " +
                                  std::to_string(spec.table.size()) + " samples, grid has " +
                                  std::to_string(grid.n_cells) + " cells");
    f.values = spec.table;
  } else if (spec.kind == InitialDataSpec::Kind::expression) {
    // Parse once, evaluate per midpoint.
    const Expr e = Expr::parse(spec.expression);
    for (int j = 0; j < grid.n_cells; ++j) f[j] = e.eval_x(grid.center(j));
  } else {
    for (int j = 0; j < grid.n_cells; ++j) f[j] = spec.eval(grid.center(j));
  }
  if (!f.all_finite())
    throw std::invalid_argument("project_initial_data: non-finite value in projected data");
  return f;
}

}  // namespace vvlab
