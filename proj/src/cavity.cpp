#include "latticepol/cavity.hpp"

#include <cmath>

#include "latticepol/error.hpp"
#include "latticepol/units.hpp"

namespace latticepol {

double CavitySpec::kz() const { return mode_index * kPi / length; }

void CavitySpec::validate() const {
  if (!(length > 0.0) || !std::isfinite(length)) throw ConfigError("cavity length must be > 0");
  if (mode_index < 1) throw ConfigError("cavity mode_index must be >= 1");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ConfigError("epsilon must be > 0");
  if (!(gamma_u >= 0.0) || !std::isfinite(gamma_u)) throw ConfigError("gamma_up must be >= 0");
  if (!(gamma_l >= 0.0) || !std::isfinite(gamma_l)) throw ConfigError("gamma_low must be >= 0");
}

double photon_dispersion(const CavitySpec& cav, double q_mag) {
  return kConstants.c / std::sqrt(cav.epsilon) * std::hypot(q_mag, cav.kz());
}

std::complex<double> coupling_strength(const CavitySpec& cav, const AtomSpec& atom,
                                       const LatticeSpec& lattice, double q_mag) {
  // The site count cancels against S = N a^2; only a enters.
  const double omega_c = photon_dispersion(cav, q_mag);
  const double a = lattice.a;
  const double mag = std::sqrt(omega_c * atom.mu * atom.mu /
                               (2.0 * kConstants.hbar * cav.length * a * a * kConstants.eps0));
  return {0.0, -mag};
}

}  // namespace latticepol
