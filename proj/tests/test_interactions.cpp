#include <cmath>

#include "doctest.h"
#include "latticepol/error.hpp"
#include "latticepol/interactions.hpp"
#include "latticepol/units.hpp"
#include "test_support.hpp"

using namespace latticepol;
using test_support::rel_close;
using test_support::uniform;

namespace {

const double kMu = eangstrom_to_cm(2.0);
const double kL2eV = ev_to_angular(2.0) / kConstants.c;

double to_ev(double joules) { return joules / kConstants.e_charge; }

Vec3 random_vec(double scale) {
  return {uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)};
}

}  // namespace

TEST_CASE("tensor coupling vanishes for orthogonal dipoles along principal axes") {
  CHECK(dipole_coupling_tensor({kMu, 0, 0}, {0, kMu, 0}, {0, 0, 1e-7}, kL2eV) == 0.0);
}

TEST_CASE("tensor coupling reduces to the collinear formula") {
  const double r = 1e-7;
  CHECK(rel_close(dipole_coupling_tensor({0, 0, kMu}, {0, 0, kMu}, {0, 0, r}, kL2eV),
                  dipole_coupling_collinear(kMu, r, kL2eV), 1e-12));
  // 100 random (R, l) pairs with lR in (0, 10).
  for (int i = 0; i < 100; ++i) {
    const double rr = uniform(1e-8, 1e-6);
    const double l = uniform(1e-6, 10.0) / rr;
    const double t = dipole_coupling_tensor({0, 0, kMu}, {0, 0, kMu}, {0, 0, rr}, l);
    const double c = dipole_coupling_collinear(kMu, rr, l);
    // Near zeros of (cos lR + lR sin lR) compare against the term magnitude.
    const double lr = l * rr;
    const double scale = kMu * kMu / (2 * kPi * kConstants.eps0 * rr * rr * rr) * (1.0 + lr);
    CHECK(std::abs(t - c) <= 1e-12 * std::max(std::abs(c), 1e-3 * scale));
  }
}

TEST_CASE("perpendicular geometry matches an independent scalar evaluation") {
  // Dipoles along z, separation along x: only the zz element survives with
  // R_z = 0, giving mu^2/(4 pi eps0 R^3) [(cos lR + lR sin lR) - (lR)^2 cos lR].
  const double r = 1e-7;
  const double lr = kL2eV * r;
  const double scalar = kMu * kMu / (4 * kPi * kConstants.eps0 * r * r * r) *
                        ((std::cos(lr) + lr * std::sin(lr)) - lr * lr * std::cos(lr));
  const double tensor = dipole_coupling_tensor({0, 0, kMu}, {0, 0, kMu}, {r, 0, 0}, kL2eV);
  CHECK(rel_close(tensor, scalar, 1e-12));
  // Frozen from a 30-digit evaluation.
  CHECK(rel_close(to_ev(tensor), 4.87159840132472979e-8, 1e-10));
}

TEST_CASE("collinear coupling anchors") {
  CHECK(rel_close(to_ev(dipole_coupling_collinear(kMu, 1e-7, kL2eV)), -1.60016204304007821e-7,
                  1e-10));
  CHECK(rel_close(to_ev(dipole_coupling_collinear(kMu, std::sqrt(2.0) * 1e-7, kL2eV)),
                  -6.34079397783065203e-8, 1e-10));
  // Static limit.
  const double r = 1e-7;
  const double static_j = -kMu * kMu / (2 * kPi * kConstants.eps0 * r * r * r);
  CHECK(dipole_coupling_collinear(kMu, r, 0.0) == doctest::Approx(static_j).epsilon(1e-15));
  CHECK(rel_close(dipole_coupling_collinear(kMu, r, 1e-7 / r), static_j, 1e-6));
}

TEST_CASE("zero separation is a domain error") {
  CHECK_THROWS_AS(dipole_coupling_collinear(kMu, 0.0, kL2eV), DomainError);
  CHECK_THROWS_AS(dipole_coupling_tensor({0, 0, kMu}, {0, 0, kMu}, {0, 0, 0}, kL2eV), DomainError);
}

TEST_CASE("tensor coupling symmetry and bilinearity (property)") {
  const auto norm = [](const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); };
  // Upper bound on |hbar J| for the given magnitudes, used as rounding scale.
  const auto bound = [&](const Vec3& m1, const Vec3& m2, const Vec3& r, double l) {
    const double rr = norm(r);
    const double lr = l * rr;
    return 4.0 * norm(m1) * norm(m2) * (1.0 + lr + lr * lr) /
           (4 * kPi * kConstants.eps0 * rr * rr * rr);
  };
  for (int i = 0; i < 200; ++i) {
    const Vec3 m1 = random_vec(kMu);
    const Vec3 m2 = random_vec(kMu);
    const Vec3 r = random_vec(1e-7);
    const double l = uniform(0.0, 5e7);
    const double j = dipole_coupling_tensor(m1, m2, r, l);
    const double tol = 1e-13 * bound(m1, m2, r, l);

    CHECK(std::abs(dipole_coupling_tensor(m2, m1, r, l) - j) <= tol);
    CHECK(std::abs(dipole_coupling_tensor(m1, m2, {-r[0], -r[1], -r[2]}, l) - j) <= tol);

    const double s = uniform(-3.0, 3.0);
    const Vec3 m3 = random_vec(kMu);
    const Vec3 combo{s * m1[0] + m3[0], s * m1[1] + m3[1], s * m1[2] + m3[2]};
    const double lhs = dipole_coupling_tensor(combo, m2, r, l);
    const double rhs = s * j + dipole_coupling_tensor(m3, m2, r, l);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * (bound(combo, m2, r, l) + std::abs(s) * bound(m1, m2, r, l) +
                                          bound(m3, m2, r, l)));
  }
}

TEST_CASE("transfer parameters") {
  const AtomSpec atom{ev_to_angular(2.0), kMu, 0.0};
  const LatticeSpec lat{1e-7, 10, 10};
  const auto col = transfer_parameters(atom, lat, GeometryMode::kCollinearPaper);
  CHECK(rel_close(angular_to_ev(col.j1), 1.60016204304007821e-7, 1e-10));
  CHECK(rel_close(angular_to_ev(col.j2), 6.34079397783065203e-8, 1e-10));

  const auto perp = transfer_parameters(atom, lat, GeometryMode::kPerpendicularTensor);
  CHECK(rel_close(angular_to_ev(perp.j1), -4.87159840132472979e-8, 1e-10));

  const AtomSpec dark{ev_to_angular(2.0), 0.0, 0.0};
  for (auto mode : {GeometryMode::kCollinearPaper, GeometryMode::kPerpendicularTensor}) {
    const auto z = transfer_parameters(dark, lat, mode);
    CHECK(z.j1 == 0.0);
    CHECK(z.j2 == 0.0);
  }

  // R^-3 law in the static limit.
  const AtomSpec slow{1e-3, kMu, 0.0};
  const auto near = transfer_parameters(slow, {1e-7, 1, 1}, GeometryMode::kCollinearPaper);
  const auto far = transfer_parameters(slow, {2e-7, 1, 1}, GeometryMode::kCollinearPaper);
  CHECK(rel_close(far.j1, near.j1 / 8.0, 1e-12));
}

TEST_CASE("geometry mode names") {
  CHECK(parse_geometry_mode("collinear-paper") == GeometryMode::kCollinearPaper);
  CHECK(parse_geometry_mode(to_string(GeometryMode::kPerpendicularTensor)) ==
        GeometryMode::kPerpendicularTensor);
  CHECK_THROWS_AS(parse_geometry_mode("sideways"), ConfigError);
}
