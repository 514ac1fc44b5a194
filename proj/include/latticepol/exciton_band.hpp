#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "latticepol/interactions.hpp"
#include "latticepol/lattice.hpp"

namespace latticepol {

enum class DispersionMode {
  /// -2 J1 (cos kx a + cos ky a) - 4 J2 cos(sqrt2 a kx) cos(sqrt2 a ky).
  /// Curvature at k = 0 matches m_eff = hbar / [2 a^2 (J1 + 4 J2)].
  kPaperEq8,
  /// Explicit sum over the shell-1 and shell-2 offsets,
  /// -2 J1 (cos kx a + cos ky a) - 4 J2 cos(kx a) cos(ky a).
  kLatticeSum,
};

std::string_view to_string(DispersionMode mode);
DispersionMode parse_dispersion_mode(std::string_view name);

struct ExcitonBand {
  double omega_a = 0.0;  // rad/s
  TransferCouplings couplings;
  double a = 0.0;  // m
  DispersionMode mode = DispersionMode::kPaperEq8;

  /// Band frequency at k = 0, omega_a - 4 (J1 + J2), identical in both modes.
  [[nodiscard]] double bottom() const;
};

/// omega(k) - omega_a. Kept separate so curvature estimates do not lose
/// precision against the large optical frequency.
double dispersion_shift(const ExcitonBand& band, const Vec2& k);
double dispersion(const ExcitonBand& band, const Vec2& k);

/// Small-k expansion: bottom + hbar k^2 / (2 m_eff).
double parabolic_dispersion(const ExcitonBand& band, double k_mag);

/// hbar / [2 a^2 (J1 + 4 J2)] in kg. Throws DomainError on a flat band.
double effective_mass(const ExcitonBand& band);

struct Observability {
  bool observable = false;
  double margin = 0.0;  // 4 J1 / gamma_a, +inf for gamma_a = 0
};

/// Exciton effects are resolvable when gamma_a < 4 J1. Requires J1 > 0.
Observability observability(const ExcitonBand& band, const AtomSpec& atom);

/// Largest lattice accepted by hopping_matrix_oracle.
inline constexpr std::size_t kOracleMaxSites = 256;

/// Builds the N x N single-excitation hopping matrix on the periodic lattice
/// (shell 1: -J1, shell 2: -J2, periodic images summed) and returns its
/// eigenvalues in ascending order.
std::vector<double> hopping_matrix_oracle(const LatticeSpec& lattice, const ExcitonBand& band);

/// dispersion(band, k) over allowed_wavevectors(lattice), sorted ascending.
std::vector<double> band_spectrum(const LatticeSpec& lattice, const ExcitonBand& band);

/// Max |a_i - b_i| / max(|b_i|, floor) over two sorted multisets of equal size.
double max_relative_deviation(std::span<const double> a, std::span<const double> b,
                              double floor = 0.0);

}  // namespace latticepol
