#include "latticepol/exciton_band.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "latticepol/error.hpp"
#include "latticepol/units.hpp"

namespace latticepol {

std::string_view to_string(DispersionMode mode) {
  switch (mode) {
    case DispersionMode::kPaperEq8:
      return "paper-eq8";
    case DispersionMode::kLatticeSum:
      return "lattice-sum";
  }
  return "unknown";
}

DispersionMode parse_dispersion_mode(std::string_view name) {
  if (name == "paper-eq8") return DispersionMode::kPaperEq8;
  if (name == "lattice-sum") return DispersionMode::kLatticeSum;
  throw ConfigError("unknown dispersion_mode '" + std::string(name) +
                    "' (expected paper-eq8 or lattice-sum)");
}

double ExcitonBand::bottom() const { return omega_a - 4.0 * (couplings.j1 + couplings.j2); }

double dispersion_shift(const ExcitonBand& band, const Vec2& k) {
  const double j1 = band.couplings.j1;
  const double j2 = band.couplings.j2;
  const double a = band.a;
  switch (band.mode) {
    case DispersionMode::kPaperEq8: {
      const double s = std::sqrt(2.0) * a;
      return -2.0 * j1 * (std::cos(k[0] * a) + std::cos(k[1] * a)) -
             4.0 * j2 * std::cos(s * k[0]) * std::cos(s * k[1]);
    }
    case DispersionMode::kLatticeSum: {
      // sum_L J(L) exp(-i k.L); imaginary parts cancel pairwise (L, -L).
      const LatticeSpec geom{a, 1, 1};
      const auto shells = neighbor_shells(geom, 2);
      const double shell_j[2] = {-j1, -j2};
      std::complex<double> sum{0.0, 0.0};
      for (std::size_t s = 0; s < shells.size(); ++s) {
        for (const Offset& o : shells[s].offsets) {
          const double phase = -(k[0] * o[0] + k[1] * o[1]) * a;
          sum += shell_j[s] * std::polar(1.0, phase);
        }
      }
      return sum.real();
    }
  }
  return 0.0;
}

double dispersion(const ExcitonBand& band, const Vec2& k) {
  return band.omega_a + dispersion_shift(band, k);
}

double effective_mass(const ExcitonBand& band) {
  const double stiffness = band.couplings.j1 + 4.0 * band.couplings.j2;
  if (stiffness == 0.0) throw DomainError("flat exciton band: J1 + 4 J2 = 0, mass is infinite");
  return kConstants.hbar / (2.0 * band.a * band.a * stiffness);
}

double parabolic_dispersion(const ExcitonBand& band, double k_mag) {
  // hbar k^2 / (2 m_eff) written without forming the mass.
  const double stiffness = band.couplings.j1 + 4.0 * band.couplings.j2;
  return band.bottom() + stiffness * band.a * band.a * k_mag * k_mag;
}

Observability observability(const ExcitonBand& band, const AtomSpec& atom) {
  const double j1 = band.couplings.j1;
  if (!(j1 > 0.0)) throw DomainError("observability needs J1 > 0");
  const double width = 4.0 * j1;
  if (atom.gamma_a == 0.0) return {true, std::numeric_limits<double>::infinity()};
  return {atom.gamma_a < width, width / atom.gamma_a};
}

std::vector<double> hopping_matrix_oracle(const LatticeSpec& lattice, const ExcitonBand& band) {
  lattice.validate();
  const std::size_t n = lattice.sites();
  if (n > kOracleMaxSites) {
    throw DomainError("lattice of " + std::to_string(n) + " sites exceeds the oracle budget of " +
                      std::to_string(kOracleMaxSites));
  }
  const int nx = lattice.nx;
  const int ny = lattice.ny;
  auto index = [&](int x, int y) {
    x = ((x % nx) + nx) % nx;
    y = ((y % ny) + ny) % ny;
    return static_cast<Eigen::Index>(x * ny + y);
  };

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  const auto shells = neighbor_shells(lattice, 2);
  const double shell_j[2] = {-band.couplings.j1, -band.couplings.j2};
  for (int x = 0; x < nx; ++x) {
    for (int y = 0; y < ny; ++y) {
      const Eigen::Index i = index(x, y);
      h(i, i) += band.omega_a;
      for (std::size_t s = 0; s < shells.size(); ++s) {
        for (const Offset& o : shells[s].offsets) h(i, index(x + o[0], y + o[1])) += shell_j[s];
      }
    }
  }

  // Diagonalize the shift only; the optical frequency is added back afterwards.
  h.diagonal().array() -= band.omega_a;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("hopping matrix diagonalization failed");
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = band.omega_a + solver.eigenvalues()(i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> band_spectrum(const LatticeSpec& lattice, const ExcitonBand& band) {
  std::vector<double> out;
  for (const Vec2& k : allowed_wavevectors(lattice)) out.push_back(dispersion(band, k));
  std::sort(out.begin(), out.end());
  return out;
}

double max_relative_deviation(std::span<const double> a, std::span<const double> b,
                              double floor) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double scale = std::max(std::abs(b[i]), floor);
    const double d = std::abs(a[i] - b[i]);
    worst = std::max(worst, scale > 0.0 ? d / scale : d);
  }
  return worst;
}

}  // namespace latticepol
