#pragma once

#include <complex>

#include "latticepol/interactions.hpp"
#include "latticepol/lattice.hpp"

namespace latticepol {

/// Planar two-mirror cavity restricted to one longitudinal mode and one
/// polarization.
struct CavitySpec {
  double length = 0.0;  // mirror spacing L, m
  int mode_index = 1;   // longitudinal index m
  double epsilon = 1.0;
  double gamma_u = 0.0;  // upper mirror damping, rad/s
  double gamma_l = 0.0;  // lower mirror damping, rad/s

  /// Longitudinal wavenumber m*pi/L.
  [[nodiscard]] double kz() const;
  void validate() const;
};

/// (c / sqrt(eps)) sqrt(q^2 + (m pi / L)^2).
double photon_dispersion(const CavitySpec& cav, double q_mag);

/// Collective exciton-photon coupling
///   f = -i sqrt(hbar omega_c(q) N mu^2 / (2 L S eps0)) / hbar
/// with S = N a^2, so |f|^2 = omega_c(q) mu^2 / (2 hbar L a^2 eps0) and the
/// result does not depend on the number of sites.
std::complex<double> coupling_strength(const CavitySpec& cav, const AtomSpec& atom,
                                       const LatticeSpec& lattice, double q_mag);

}  // namespace latticepol
