#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "latticepol/error.hpp"
#include "latticepol/exciton_band.hpp"
#include "latticepol/units.hpp"
#include "test_support.hpp"

using namespace latticepol;
using test_support::rel_close;
using test_support::uniform;

namespace {

ExcitonBand make_band(double j1, double j2, DispersionMode mode, double a = 1e-7) {
  return {ev_to_angular(2.0), {j1, j2}, a, mode};
}

}  // namespace

TEST_CASE("k = 0 sits at omega_a - 4 (J1 + J2) in both modes") {
  for (auto mode : {DispersionMode::kPaperEq8, DispersionMode::kLatticeSum}) {
    const auto band = make_band(2.4e8, 9.6e7, mode);
    CHECK(dispersion_shift(band, {0, 0}) == doctest::Approx(-4.0 * (2.4e8 + 9.6e7)));
    CHECK(dispersion(band, {0, 0}) == doctest::Approx(band.bottom()).epsilon(1e-15));
  }
}

TEST_CASE("zone-edge values") {
  const double a = 1e-7;
  const double j1 = 2.0e8, j2 = 7.0e7;
  // paper-eq8 at (pi/a, 0): -2 J1 (-1 + 1) - 4 J2 cos(sqrt2 pi) = +4 J2 * 0.26625...
  const auto eq8 = make_band(j1, j2, DispersionMode::kPaperEq8, a);
  const double edge_eq8 = dispersion_shift(eq8, {kPi / a, 0});
  CHECK(edge_eq8 == doctest::Approx(-4.0 * j2 * std::cos(std::sqrt(2.0) * kPi)));
  CHECK(-std::cos(std::sqrt(2.0) * kPi) == doctest::Approx(0.2662553420414156));

  const auto sum = make_band(j1, j2, DispersionMode::kLatticeSum, a);
  CHECK(dispersion_shift(sum, {kPi / a, kPi / a}) == doctest::Approx(4.0 * j1 - 4.0 * j2));
}

TEST_CASE("dispersion is even and periodic (property)") {
  const double a = 1e-7;
  for (int i = 0; i < 200; ++i) {
    const double j1 = uniform(-1e9, 1e9), j2 = uniform(-1e9, 1e9);
    const Vec2 k{uniform(-5.0, 5.0) / a, uniform(-5.0, 5.0) / a};
    const double scale = 4.0 * (std::abs(j1) + std::abs(j2));
    for (auto mode : {DispersionMode::kPaperEq8, DispersionMode::kLatticeSum}) {
      const auto band = make_band(j1, j2, mode, a);
      CHECK(std::abs(dispersion_shift(band, k) - dispersion_shift(band, {-k[0], -k[1]})) <=
            1e-13 * scale);
    }
    const auto band = make_band(j1, j2, DispersionMode::kLatticeSum, a);
    const double g = 2.0 * kPi / a;
    CHECK(std::abs(dispersion_shift(band, k) - dispersion_shift(band, {k[0] + g, k[1] - 2 * g})) <=
          1e-12 * scale);
  }
}

TEST_CASE("modes agree when J2 = 0") {
  for (int i = 0; i < 100; ++i) {
    const Vec2 k{uniform(-3e7, 3e7), uniform(-3e7, 3e7)};
    const double j1 = uniform(1e6, 1e9);
    CHECK(dispersion(make_band(j1, 0.0, DispersionMode::kPaperEq8), k) ==
          dispersion(make_band(j1, 0.0, DispersionMode::kLatticeSum), k));
  }
}

TEST_CASE("band minimum is at k = 0 for attractive couplings") {
  const LatticeSpec lat{1e-7, 12, 12};
  for (auto mode : {DispersionMode::kPaperEq8, DispersionMode::kLatticeSum}) {
    const auto band = make_band(2.4e8, 9.6e7, mode);
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto& k : allowed_wavevectors(lat)) lowest = std::min(lowest, dispersion_shift(band, k));
    CHECK(lowest == doctest::Approx(dispersion_shift(band, {0, 0})));
  }
}

TEST_CASE("effective mass") {
  const double a = 1e-7;
  const double j1 = ev_to_angular(1e-7), j2 = ev_to_angular(3e-8);
  const auto band = make_band(j1, j2, DispersionMode::kPaperEq8, a);
  CHECK(rel_close(effective_mass(band), 1.57757222497167150e-29, 1e-12));

  const auto nn = make_band(j1, 0.0, DispersionMode::kPaperEq8, a);
  CHECK(rel_close(effective_mass(nn), kConstants.hbar / (2 * a * a * j1), 1e-15));

  CHECK_THROWS_AS(effective_mass(make_band(4e8, -1e8, DispersionMode::kPaperEq8)), DomainError);
}

TEST_CASE("finite-difference curvature matches hbar / m_eff") {
  const double a = 1e-7;
  const auto band = make_band(ev_to_angular(1e-7), ev_to_angular(3e-8), DispersionMode::kPaperEq8, a);
  const double h = 1e-4 / a;
  const double curvature = (dispersion_shift(band, {h, 0}) - 2.0 * dispersion_shift(band, {0, 0}) +
                            dispersion_shift(band, {-h, 0})) / (h * h);
  CHECK(rel_close(curvature, kConstants.hbar / effective_mass(band), 1e-6));
}

TEST_CASE("parabolic dispersion") {
  const double a = 1e-7;
  const double j1 = 2.4e8, j2 = 9.6e7;
  const auto band = make_band(j1, j2, DispersionMode::kPaperEq8, a);
  CHECK(parabolic_dispersion(band, 0.0) == band.bottom());

  // Second-order agreement: residual / (J1 a^2 k^2) shrinks with ka.
  double prev = std::numeric_limits<double>::infinity();
  for (double ka : {1e-1, 1e-2, 1e-3}) {
    const double k = ka / a;
    const double exact = dispersion_shift(band, {k, 0}) + 4.0 * (j1 + j2);
    const double para = (parabolic_dispersion(band, k) - band.bottom());
    const double rel = std::abs(para - exact) / (j1 * ka * ka);
    CHECK(rel < prev);
    prev = rel;
  }
  CHECK(prev < 1e-5);

  // J2 = 0, ka = 0.1: lift J1 (ka)^2 (1 + O(k^2 a^2)).
  const auto nn = make_band(j1, 0.0, DispersionMode::kPaperEq8, a);
  const double lift = parabolic_dispersion(nn, 0.1 / a) - nn.bottom();
  CHECK(lift == doctest::Approx(j1 * 0.01).epsilon(1e-12));
}

TEST_CASE("observability") {
  const double j1 = ev_to_angular(1e-7);
  const auto band = make_band(j1, 0.0, DispersionMode::kPaperEq8);
  const auto rb = observability(band, {ev_to_angular(1.56), 1.0, ev_to_angular(2.5e-8)});
  CHECK(rb.observable);
  CHECK(rb.margin == 16.0);

  const auto free = observability(band, {ev_to_angular(1.56), 1.0, 0.0});
  CHECK(free.observable);
  CHECK(std::isinf(free.margin));

  const auto na_band = make_band(ev_to_angular(1e-8), 0.0, DispersionMode::kPaperEq8);
  const auto na = observability(na_band, {ev_to_angular(2.1), 1.0, ev_to_angular(4e-8)});
  CHECK_FALSE(na.observable);
  CHECK(na.margin == 1.0);

  CHECK_THROWS_AS(observability(make_band(0.0, 1e8, DispersionMode::kPaperEq8), {1.0, 1.0, 1.0}),
                  DomainError);
}

TEST_CASE("hopping-matrix oracle: tiny lattices") {
  const double j1 = 3e8;
  const auto band = make_band(j1, 0.0, DispersionMode::kLatticeSum);
  const auto one = hopping_matrix_oracle({1e-7, 1, 1}, make_band(j1, 5e7, DispersionMode::kLatticeSum));
  REQUIRE(one.size() == 1);
  // A single periodic site couples to its own images in both shells.
  CHECK(one[0] == doctest::Approx(band.omega_a - 4 * j1 - 4 * 5e7));

  // 2x2 periodic, J2 = 0: H = omega_a - 2 J1 (Px + Py) with commuting swaps
  // Px, Py (eigenvalues +-1), so the spectrum is {-4 J1, 0, 0, 4 J1}.
  const auto four = hopping_matrix_oracle({1e-7, 2, 2}, band);
  REQUIRE(four.size() == 4);
  const double expected[4] = {-4 * j1, 0.0, 0.0, 4 * j1};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs((four[i] - band.omega_a) - expected[i]) < 1e-6 * j1);
  }
}

TEST_CASE("hopping-matrix oracle agrees with the lattice-sum dispersion (property)") {
  for (auto [nx, ny] : {std::pair{6, 6}, std::pair{5, 3}, std::pair{4, 6}, std::pair{1, 8}}) {
    const LatticeSpec lat{1e-7, nx, ny};
    for (int trial = 0; trial < 5; ++trial) {
      ExcitonBand band = make_band(uniform(-1e9, 1e9), uniform(-1e9, 1e9), DispersionMode::kLatticeSum);
      band.omega_a = 0.0;
      const auto ed = hopping_matrix_oracle(lat, band);
      const auto formula = band_spectrum(lat, band);
      const double scale = 4 * (std::abs(band.couplings.j1) + std::abs(band.couplings.j2));
      CHECK(max_relative_deviation(ed, formula, scale) < 1e-10);
    }
  }
}

TEST_CASE("hopping-matrix oracle budget") {
  CHECK_THROWS_AS(hopping_matrix_oracle({1e-7, 17, 16}, make_band(1, 1, DispersionMode::kLatticeSum)),
                  DomainError);
  CHECK_NOTHROW(hopping_matrix_oracle({1e-7, 16, 16}, make_band(1, 1, DispersionMode::kLatticeSum)));
}

TEST_CASE("max_relative_deviation") {
  const std::vector<double> a{1.0, 2.0}, b{1.0, 2.0 + 2e-9};
  CHECK(max_relative_deviation(a, b) == doctest::Approx(1e-9).epsilon(1e-6));
  CHECK(std::isinf(max_relative_deviation(a, std::vector<double>{1.0})));
}

TEST_CASE("dispersion mode names") {
  CHECK(parse_dispersion_mode("paper-eq8") == DispersionMode::kPaperEq8);
  CHECK(parse_dispersion_mode(to_string(DispersionMode::kLatticeSum)) == DispersionMode::kLatticeSum);
  CHECK_THROWS_AS(parse_dispersion_mode("eq9"), ConfigError);
}
