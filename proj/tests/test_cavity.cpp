#include <cmath>

#include "doctest.h"
#include "latticepol/cavity.hpp"
#include "latticepol/error.hpp"
#include "latticepol/units.hpp"
#include "test_support.hpp"

using namespace latticepol;
using test_support::rel_close;

namespace {
const CavitySpec kCav{angstrom_to_m(3100), 1, 1.0, 0.0, 0.0};
const AtomSpec kAtom{ev_to_angular(2.0), eangstrom_to_cm(2.0), 0.0};
const LatticeSpec kLat{angstrom_to_m(2000), 100, 100};
}  // namespace

TEST_CASE("photon dispersion at q = 0") {
  // c pi / L evaluated to 30 digits.
  CHECK(rel_close(photon_dispersion(kCav, 0.0), 3.03814768920782787e15, 1e-14));
  CHECK(angular_to_ev(photon_dispersion(kCav, 0.0)) == doctest::Approx(2.0).epsilon(0.01));
  // Same L/m with m = 3.
  const CavitySpec third{angstrom_to_m(9300), 3, 1.0, 0.0, 0.0};
  CHECK(rel_close(photon_dispersion(third, 0.0), photon_dispersion(kCav, 0.0), 1e-14));
}

TEST_CASE("photon dispersion limits and scaling") {
  const double q = 100.0 * kCav.kz();
  CHECK(std::abs(photon_dispersion(kCav, q) / (kConstants.c * q) - 1.0) < 1e-4);

  CavitySpec dense = kCav;
  dense.epsilon = 4.0;
  for (double qq : {0.0, 1e6, 3e7}) {
    CHECK(rel_close(photon_dispersion(dense, qq), 0.5 * photon_dispersion(kCav, qq), 1e-15));
  }
  double prev = photon_dispersion(kCav, 0.0);
  for (int i = 1; i <= 100; ++i) {
    const double w = photon_dispersion(kCav, i * 3e5);
    CHECK(w > prev);
    prev = w;
  }
}

TEST_CASE("coupling strength anchor") {
  const auto f = coupling_strength(kCav, kAtom, kLat, 0.0);
  CHECK(f.real() == 0.0);
  CHECK(f.imag() < 0.0);
  CHECK(rel_close(std::abs(f), 3.67034209404047817e11, 1e-12));
  CHECK(std::abs(std::abs(f) - 4e11) / 4e11 < 0.10);
}

TEST_CASE("coupling strength scaling and inversion (property)") {
  const AtomSpec dark{kAtom.omega_a, 0.0, 0.0};
  CHECK(std::abs(coupling_strength(kCav, dark, kLat, 0.0)) == 0.0);

  LatticeSpec wide = kLat;
  wide.a *= 4.0;
  CHECK(rel_close(std::abs(coupling_strength(kCav, kAtom, wide, 0.0)),
                  0.25 * std::abs(coupling_strength(kCav, kAtom, kLat, 0.0)), 1e-15));

  for (int i = 0; i < 100; ++i) {
    const double q = test_support::uniform(0.0, 3e7);
    const auto f = coupling_strength(kCav, kAtom, kLat, q);
    const double inverted = std::norm(f) * 2.0 * kConstants.hbar * kCav.length * kLat.a * kLat.a *
                            kConstants.eps0 / (kAtom.mu * kAtom.mu);
    CHECK(rel_close(inverted, photon_dispersion(kCav, q), 1e-12));
    // N cancels against S = N a^2 exactly.
    for (auto [nx, ny] : {std::pair{1, 1}, std::pair{7, 3}, std::pair{1000, 1000}}) {
      CHECK(coupling_strength(kCav, kAtom, {kLat.a, nx, ny}, q) == f);
    }
  }
}

TEST_CASE("cavity validation") {
  CHECK_NOTHROW(kCav.validate());
  CHECK_THROWS_AS((CavitySpec{0.0, 1, 1.0, 0, 0}.validate()), ConfigError);
  CHECK_THROWS_AS((CavitySpec{1e-7, 0, 1.0, 0, 0}.validate()), ConfigError);
  CHECK_THROWS_AS((CavitySpec{1e-7, 1, 1.0, -1, 0}.validate()), ConfigError);
}
