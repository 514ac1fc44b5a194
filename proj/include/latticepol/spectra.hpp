#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "latticepol/polariton.hpp"

namespace latticepol {

/// Mirror and exciton damping rates, rad/s.
struct DampingSpec {
  double gamma_u = 0.0;
  double gamma_l = 0.0;
  double gamma_ex = 0.0;

  /// (gamma_u + gamma_l) / 2
  [[nodiscard]] double gamma() const { return 0.5 * (gamma_u + gamma_l); }
  /// (gamma_u - gamma_l) / 2
  [[nodiscard]] double gamma_bar() const { return 0.5 * (gamma_u - gamma_l); }
  void validate() const;
};

/// Relative size of the linewidth regulator used when gamma_ex = 0.
inline constexpr double kRegulatorFraction = 1e-6;

/// Lambda(omega) = sum_r |Y_r|^2 / (omega - Omega_r + i Gamma_r).
/// Throws DomainError if omega sits on an undamped pole with photon weight.
std::complex<double> lambda_fn(double omega, std::span<const PolaritonMode> modes);

struct SpectralPoint {
  double t = 0.0;
  double r = 0.0;
  double a = 0.0;
};

/// Closed-form single-side-pumped response for a given Lambda value:
///   T = gU gL |L|^2 / |D|^2
///   R = (1 - i gbar (L - L*) + gbar^2 |L|^2) / |D|^2
///   A = i gU (L - L*) / |D|^2,    |D|^2 = |1 + i g L|^2
SpectralPoint response_from_lambda(std::complex<double> lambda, const DampingSpec& damping);

struct SpectralResponse {
  double k = 0.0;
  std::vector<double> omega;
  std::vector<double> t;
  std::vector<double> r;
  std::vector<double> a;
  bool regulated = false;  // gamma_ex was zero and a regulator was added
  double regulator = 0.0;  // rad/s added to each branch damping
};

/// Evaluates T, R, A on the grid. When gamma_ex == 0 and gamma > 0 each
/// branch damping is raised by kRegulatorFraction * gamma.
SpectralResponse tra_spectra(std::span<const double> omega_grid, const PolaritonPair& pair,
                             const DampingSpec& damping, double k = 0.0);

/// max |T + R + A - 1| over the grid.
double sum_rule_check(const SpectralResponse& resp);

/// Half width at half maximum of the single-branch transmission resonance,
/// Gamma_r + gamma |Y_r|^2.
double branch_halfwidth(const PolaritonMode& mode, const DampingSpec& damping);

/// Uniform grid over [Omega_- - 10 G, Omega_+ + 10 G] (G = gamma + gamma_ex)
/// merged with one window of the same density-count around each branch,
/// Omega_r +- 10 * branch_halfwidth. Sorted, duplicates removed.
std::vector<double> default_grid(const PolaritonPair& pair, const DampingSpec& damping,
                                 std::size_t points = 2001);

std::vector<double> uniform_grid(double lo, double hi, std::size_t points);

}  // namespace latticepol
