#pragma once

#include <array>
#include <string_view>

#include "latticepol/lattice.hpp"

namespace latticepol {

using Vec3 = std::array<double, 3>;

/// Two-level atom.
struct AtomSpec {
  double omega_a = 0.0;  // transition frequency, rad/s
  double mu = 0.0;       // transition dipole magnitude, C*m
  double gamma_a = 0.0;  // natural linewidth, rad/s

  /// Resonance wavenumber l = omega_a / c.
  [[nodiscard]] double wavenumber() const;
  void validate() const;
};

/// Nearest and next-nearest transfer rates under J(a) = -j1, J(sqrt2 a) = -j2.
/// Positive values mean attractive (negative) couplings.
struct TransferCouplings {
  double j1 = 0.0;  // rad/s
  double j2 = 0.0;  // rad/s
};

enum class GeometryMode {
  kCollinearPaper,       // dipoles along the separation vector
  kPerpendicularTensor,  // dipoles normal to the lattice plane
};

std::string_view to_string(GeometryMode mode);
GeometryMode parse_geometry_mode(std::string_view name);

/// Retarded resonant dipole-dipole coupling hbar*J in joules:
///   sum_ij mu1_i mu2_j / (4 pi eps0 R^3) *
///     [ (d_ij - 3 Ri Rj)(cos lR + lR sin lR) - (d_ij - Ri Rj) (lR)^2 cos lR ]
/// Throws DomainError for |r| == 0.
double dipole_coupling_tensor(const Vec3& mu1, const Vec3& mu2, const Vec3& r, double l);

/// Same coupling for two equal dipoles parallel to the separation:
///   -mu^2 / (2 pi eps0 R^3) (cos lR + lR sin lR).
double dipole_coupling_collinear(double mu, double r_mag, double l);

TransferCouplings transfer_parameters(const AtomSpec& atom, const LatticeSpec& lattice,
                                      GeometryMode geometry);

}  // namespace latticepol
