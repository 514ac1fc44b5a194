#include "doctest.h"
#include "latticepol/units.hpp"
#include "test_support.hpp"

using namespace latticepol;
using test_support::rel_close;

TEST_CASE("ev_to_angular anchors") {
  CHECK(ev_to_angular(0.0) == 0.0);
  // 30-digit evaluation of E*e/hbar with CODATA 2018 constants.
  CHECK(rel_close(ev_to_angular(2.0), 3.03853489761902104e15, 1e-14));
  CHECK(rel_close(ev_to_angular(1.56), 2.37005722014283641e15, 1e-14));
  CHECK(rel_close(ev_to_angular(-2.0), -3.03853489761902104e15, 1e-14));
}

TEST_CASE("angular_to_ev inverts ev_to_angular") {
  CHECK(angular_to_ev(0.0) == 0.0);
  CHECK(rel_close(angular_to_ev(3.0386e15), 2.0, 1e-4));
  for (int i = 0; i < 200; ++i) {
    const double x = std::exp(test_support::uniform(-30.0, 5.0));
    CHECK(rel_close(angular_to_ev(ev_to_angular(x)), x, 1e-12));
  }
}

TEST_CASE("conversions are linear") {
  for (int i = 0; i < 100; ++i) {
    const double x = test_support::uniform(0.01, 10.0);
    const double s = test_support::uniform(0.1, 100.0);
    CHECK(rel_close(ev_to_angular(s * x), s * ev_to_angular(x), 1e-15));
    CHECK(rel_close(angstrom_to_m(s * x), s * angstrom_to_m(x), 1e-15));
  }
}

TEST_CASE("length and dipole conversions") {
  CHECK(angstrom_to_m(0.0) == 0.0);
  CHECK(rel_close(angstrom_to_m(1000.0), 1e-7, 1e-15));
  CHECK(rel_close(angstrom_to_m(3100.0), 3.1e-7, 1e-15));
  CHECK(rel_close(m_to_angstrom(angstrom_to_m(2000.0)), 2000.0, 1e-15));
  CHECK(rel_close(eangstrom_to_cm(2.0), 2.0 * 1.602176634e-19 * 1e-10, 1e-15));
}

TEST_CASE("constants are positive") {
  CHECK(kConstants.hbar > 0.0);
  CHECK(kConstants.c > 0.0);
  CHECK(kConstants.eps0 > 0.0);
  CHECK(kConstants.e_charge > 0.0);
}
