#include "latticepol/spectra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "latticepol/error.hpp"

namespace latticepol {

void DampingSpec::validate() const {
  if (!(gamma_u >= 0.0) || !(gamma_l >= 0.0) || !(gamma_ex >= 0.0)) {
    throw ConfigError("damping rates must be >= 0");
  }
}

std::complex<double> lambda_fn(double omega, std::span<const PolaritonMode> modes) {
  std::complex<double> sum{0.0, 0.0};
  for (const PolaritonMode& m : modes) {
    const double w = m.photon_weight();
    if (w == 0.0) continue;
    const std::complex<double> denom{omega - m.omega, m.gamma};
    if (denom == 0.0) {
      throw DomainError("probe frequency on an undamped polariton pole (" +
                        std::string(to_string(m.branch)) + " branch)");
    }
    sum += w / denom;
  }
  return sum;
}

SpectralPoint response_from_lambda(std::complex<double> lambda, const DampingSpec& damping) {
  const double g = damping.gamma();
  const double gbar = damping.gamma_bar();
  const double lam2 = std::norm(lambda);
  const double im = lambda.imag();  // i (L - L*) = -2 Im L
  const double d2 = std::norm(std::complex<double>{1.0, 0.0} + std::complex<double>{0.0, g} * lambda);
  SpectralPoint p;
  p.t = damping.gamma_u * damping.gamma_l * lam2 / d2;
  p.r = (1.0 + 2.0 * gbar * im + gbar * gbar * lam2) / d2;
  p.a = -2.0 * damping.gamma_u * im / d2;
  return p;
}

SpectralResponse tra_spectra(std::span<const double> omega_grid, const PolaritonPair& pair,
                             const DampingSpec& damping, double k) {
  damping.validate();
  std::array<PolaritonMode, 2> modes{pair.upper, pair.lower};
  SpectralResponse out;
  out.k = k;
  if (damping.gamma_ex == 0.0 && damping.gamma() > 0.0) {
    out.regulated = true;
    out.regulator = kRegulatorFraction * damping.gamma();
    for (auto& m : modes) m.gamma += out.regulator;
  }
  const std::size_t n = omega_grid.size();
  out.omega.assign(omega_grid.begin(), omega_grid.end());
  out.t.resize(n);
  out.r.resize(n);
  out.a.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SpectralPoint p = response_from_lambda(lambda_fn(omega_grid[i], modes), damping);
    out.t[i] = p.t;
    out.r[i] = p.r;
    out.a[i] = p.a;
  }
  return out;
}

double sum_rule_check(const SpectralResponse& resp) {
  double worst = 0.0;
  for (std::size_t i = 0; i < resp.omega.size(); ++i) {
    worst = std::max(worst, std::abs(resp.t[i] + resp.r[i] + resp.a[i] - 1.0));
  }
  return worst;
}

double branch_halfwidth(const PolaritonMode& mode, const DampingSpec& damping) {
  return mode.gamma + damping.gamma() * mode.photon_weight();
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t points) {
  std::vector<double> g;
  if (points == 0) return g;
  if (points == 1) return {0.5 * (lo + hi)};
  g.reserve(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) g.push_back(lo + step * static_cast<double>(i));
  g.back() = hi;
  return g;
}

std::vector<double> default_grid(const PolaritonPair& pair, const DampingSpec& damping,
                                 std::size_t points) {
  const double total = damping.gamma() + damping.gamma_ex;
  std::vector<double> grid =
      uniform_grid(pair.lower.omega - 10.0 * total, pair.upper.omega + 10.0 * total, points);
  for (const PolaritonMode* m : {&pair.lower, &pair.upper}) {
    const double w = branch_halfwidth(*m, damping);
    if (!(w > 0.0)) continue;
    const auto window = uniform_grid(m->omega - 10.0 * w, m->omega + 10.0 * w, points);
    grid.insert(grid.end(), window.begin(), window.end());
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace latticepol
