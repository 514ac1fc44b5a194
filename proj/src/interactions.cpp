#include "latticepol/interactions.hpp"

#include <cmath>
#include <string>

#include "latticepol/error.hpp"
#include "latticepol/units.hpp"

namespace latticepol {

double AtomSpec::wavenumber() const { return omega_a / kConstants.c; }

void AtomSpec::validate() const {
  if (!(omega_a > 0.0) || !std::isfinite(omega_a)) {
    throw ConfigError("atomic transition frequency must be positive");
  }
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw ConfigError("transition dipole must be >= 0");
  if (!(gamma_a >= 0.0) || !std::isfinite(gamma_a)) {
    throw ConfigError("atomic linewidth must be >= 0");
  }
}

std::string_view to_string(GeometryMode mode) {
  switch (mode) {
    case GeometryMode::kCollinearPaper:
      return "collinear-paper";
    case GeometryMode::kPerpendicularTensor:
      return "perpendicular-tensor";
  }
  return "unknown";
}

GeometryMode parse_geometry_mode(std::string_view name) {
  if (name == "collinear-paper") return GeometryMode::kCollinearPaper;
  if (name == "perpendicular-tensor") return GeometryMode::kPerpendicularTensor;
  throw ConfigError("unknown geometry_mode '" + std::string(name) +
                    "' (expected collinear-paper or perpendicular-tensor)");
}

double dipole_coupling_tensor(const Vec3& mu1, const Vec3& mu2, const Vec3& r, double l) {
  const double rr = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
  if (!(rr > 0.0)) throw DomainError("dipole coupling at zero separation");
  const Vec3 u{r[0] / rr, r[1] / rr, r[2] / rr};
  const double lr = l * rr;
  const double near = std::cos(lr) + lr * std::sin(lr);
  const double far = lr * lr * std::cos(lr);

  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double delta = i == j ? 1.0 : 0.0;
      const double uu = u[i] * u[j];
      sum += mu1[i] * mu2[j] * ((delta - 3.0 * uu) * near - (delta - uu) * far);
    }
  }
  return sum / (4.0 * kPi * kConstants.eps0 * rr * rr * rr);
}

double dipole_coupling_collinear(double mu, double r_mag, double l) {
  if (!(r_mag > 0.0)) throw DomainError("dipole coupling at zero separation");
  const double lr = l * r_mag;
  return -mu * mu / (2.0 * kPi * kConstants.eps0 * r_mag * r_mag * r_mag) *
         (std::cos(lr) + lr * std::sin(lr));
}

TransferCouplings transfer_parameters(const AtomSpec& atom, const LatticeSpec& lattice,
                                      GeometryMode geometry) {
  const double l = atom.wavenumber();
  const double r1 = lattice.a;
  const double r2 = std::sqrt(2.0) * lattice.a;
  const double hbar = kConstants.hbar;

  TransferCouplings out;
  switch (geometry) {
    case GeometryMode::kCollinearPaper:
      out.j1 = -dipole_coupling_collinear(atom.mu, r1, l) / hbar;
      out.j2 = -dipole_coupling_collinear(atom.mu, r2, l) / hbar;
      break;
    case GeometryMode::kPerpendicularTensor: {
      const Vec3 m{0.0, 0.0, atom.mu};
      out.j1 = -dipole_coupling_tensor(m, m, {r1, 0.0, 0.0}, l) / hbar;
      out.j2 = -dipole_coupling_tensor(m, m, {lattice.a, lattice.a, 0.0}, l) / hbar;
      break;
    }
  }
  if (!std::isfinite(out.j1) || !std::isfinite(out.j2)) {
    throw DomainError("non-finite transfer coupling");
  }
  return out;
}

}  // namespace latticepol
