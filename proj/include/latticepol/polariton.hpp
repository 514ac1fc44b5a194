#pragma once

#include <array>
#include <complex>
#include <string_view>

namespace latticepol {

enum class Branch { kUpper, kLower };

std::string_view to_string(Branch b);

/// One polariton branch at a fixed in-plane wavevector.
struct PolaritonMode {
  Branch branch = Branch::kLower;
  double omega = 0.0;         // rad/s
  std::complex<double> x_amp;  // exciton Hopfield amplitude
  std::complex<double> y_amp;  // photon Hopfield amplitude
  double gamma = 0.0;         // Gamma_ex |X|^2, rad/s

  [[nodiscard]] double exciton_weight() const { return std::norm(x_amp); }
  [[nodiscard]] double photon_weight() const { return std::norm(y_amp); }
};

struct PolaritonPair {
  PolaritonMode upper;
  PolaritonMode lower;
  double detuning = 0.0;  // delta_k, rad/s
  double half_splitting = 0.0;  // Delta_k = sqrt(delta^2 + |f|^2)

  [[nodiscard]] double splitting() const { return upper.omega - lower.omega; }
};

/// delta_k = (omega_c - omega_x) / 2.
double detuning(double omega_c, double omega_x);

/// Closed-form diagonalization of the exciton-photon block
///   [[omega_x, f], [f*, omega_c]]
/// Omega_pm = (omega_c + omega_x)/2 +- Delta,
/// X_pm = +-sqrt((Delta -+ delta) / (2 Delta)), Y_pm = f / sqrt(2 Delta (Delta -+ delta)).
/// Delta -+ delta is formed without cancellation, so weights stay accurate far
/// from resonance. The photon amplitude carries the phase of f (or -i when
/// f = 0). Throws DomainError when delta = f = 0.
PolaritonPair branches(double omega_x, double omega_c, std::complex<double> f, double gamma_ex);

struct EigenPairWeights {
  double value = 0.0;
  double exciton_weight = 0.0;
  double photon_weight = 0.0;
};

/// Numerical diagonalization of the same Hermitian 2x2 block, ascending order
/// (index 0 is the lower branch).
std::array<EigenPairWeights, 2> eigen_oracle(double omega_x, double omega_c,
                                             std::complex<double> f);

}  // namespace latticepol
