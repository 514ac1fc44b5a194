#include "latticepol/polariton.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "latticepol/error.hpp"

namespace latticepol {

std::string_view to_string(Branch b) { return b == Branch::kUpper ? "upper" : "lower"; }

double detuning(double omega_c, double omega_x) { return 0.5 * (omega_c - omega_x); }

PolaritonPair branches(double omega_x, double omega_c, std::complex<double> f, double gamma_ex) {
  const double delta = detuning(omega_c, omega_x);
  const double f2 = std::norm(f);
  const double big_delta = std::hypot(delta, std::abs(f));
  if (!(big_delta > 0.0)) {
    throw DomainError("uncoupled degenerate exciton and photon (delta = f = 0)");
  }

  // minus = Delta - delta, plus = Delta + delta; minus * plus = |f|^2.
  double minus = 0.0;
  double plus = 0.0;
  if (delta >= 0.0) {
    plus = big_delta + delta;
    minus = f2 / plus;
  } else {
    minus = big_delta - delta;
    plus = f2 / minus;
  }
  const double norm = minus + plus;
  const double xu2 = minus / norm;
  const double xl2 = plus / norm;

  const std::complex<double> phase =
      f2 > 0.0 ? f / std::abs(f) : std::complex<double>{0.0, -1.0};
  const double mean = omega_x + delta;

  PolaritonPair out;
  out.detuning = delta;
  out.half_splitting = big_delta;
  out.upper = {Branch::kUpper, mean + big_delta, std::sqrt(xu2), phase * std::sqrt(xl2),
               gamma_ex * xu2};
  out.lower = {Branch::kLower, mean - big_delta, -std::sqrt(xl2), phase * std::sqrt(xu2),
               gamma_ex * xl2};
  return out;
}

std::array<EigenPairWeights, 2> eigen_oracle(double omega_x, double omega_c,
                                             std::complex<double> f) {
  // Diagonalize about the mean so the splitting is not swamped by the
  // optical frequency.
  const double mean = 0.5 * (omega_x + omega_c);
  Eigen::Matrix2cd m;
  m << omega_x - mean, f, std::conj(f), omega_c - mean;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(m);
  std::array<EigenPairWeights, 2> out;
  for (int i = 0; i < 2; ++i) {
    const auto v = solver.eigenvectors().col(i);
    out[i] = {mean + solver.eigenvalues()(i), std::norm(v(0)), std::norm(v(1))};
  }
  return out;
}

}  // namespace latticepol
