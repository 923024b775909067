#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace vvlab {

/// Polytropic gas law p(rho) = delta*rho^2 + kappa*rho^gamma with the derived
/// exponents theta = (gamma-1)/2 and lambda = (3-gamma)/(2(gamma-1)).
/// The default kappa = (gamma-1)^2/(4*gamma) makes the sound speed exactly
/// theta*rho^theta, so u +- rho^theta are the classical Riemann invariants.
struct GasModel {
  double gamma = 2.0;
  double kappa = 0.125;
  double delta = 0.0;

  static double default_kappa(double gamma) { return (gamma - 1.0) * (gamma - 1.0) / (4.0 * gamma); }

  static GasModel make(double gamma, double kappa = -1.0, double delta = 0.0) {
    if (!(gamma > 1.0)) throw std::invalid_argument("GasModel: gamma must be > 1");
    if (kappa < 0.0) kappa = default_kappa(gamma);
    if (!(kappa > 0.0)) throw std::invalid_argument("GasModel: kappa must be > 0");
    if (delta < 0.0) throw std::invalid_argument("GasModel: delta must be >= 0");
    return GasModel{gamma, kappa, delta};
  }

  double theta() const { return 0.5 * (gamma - 1.0); }
  double lambda_exp() const { return (3.0 - gamma) / (2.0 * (gamma - 1.0)); }
};

inline void require_nonnegative_rho(double rho, const char* who) {
  if (rho < 0.0) throw std::invalid_argument(std::string(who) + ": negative density");
}

inline double pressure(const GasModel& g, double rho) {
  require_nonnegative_rho(rho, "pressure");
  return g.delta * rho * rho + g.kappa * std::pow(rho, g.gamma);
}

/// Specific internal energy, with the quadratic part folded in so that
/// p = rho^2 * e'(rho) holds for the full pressure law.
inline double internal_energy(const GasModel& g, double rho) {
  require_nonnegative_rho(rho, "internal_energy");
  if (rho == 0.0) return 0.0;
  return g.kappa / (g.gamma - 1.0) * std::pow(rho, g.gamma - 1.0) + g.delta * rho;
}

inline double pressure_derivative(const GasModel& g, double rho) {
  return 2.0 * g.delta * rho + g.gamma * g.kappa * std::pow(rho, g.gamma - 1.0);
}

inline double sound_speed(const GasModel& g, double rho) {
  if (!(rho > 0.0)) throw std::invalid_argument("sound_speed: density must be > 0");
  return std::sqrt(pressure_derivative(g, rho));
}

/// (w, z) = (u + rho^theta, u - rho^theta); w = z exactly at vacuum.
inline std::pair<double, double> riemann_invariants(const GasModel& g, double rho, double u) {
  require_nonnegative_rho(rho, "riemann_invariants");
  const double r = std::pow(rho, g.theta());
  return {u + r, u - r};
}

/// Flux of the (rho, m) system: (m, m^2/rho + p). Vacuum cells give (0, 0).
inline std::pair<double, double> euler_flux(const GasModel& g, double rho, double m) {
  if (rho <= 0.0) return {0.0, 0.0};
  return {m, m * m / rho + pressure(g, rho)};
}

}  // namespace vvlab
