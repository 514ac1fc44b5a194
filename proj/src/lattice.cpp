#include "latticepol/lattice.hpp"

#include <cmath>
#include <string>

#include "latticepol/error.hpp"
#include "latticepol/units.hpp"

namespace latticepol {

void LatticeSpec::validate() const {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw ConfigError("lattice constant must be positive and finite");
  }
  if (nx < 1 || ny < 1) {
    throw ConfigError("lattice dimensions must be >= 1, got " + std::to_string(nx) + "x" +
                      std::to_string(ny));
  }
}

std::vector<int> mode_indices(int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  const int lo = -(n / 2);
  for (int i = 0; i < n; ++i) out.push_back(lo + i);
  return out;
}

std::vector<Vec2> allowed_wavevectors(const LatticeSpec& spec) {
  spec.validate();
  const double gx = 2.0 * kPi / (spec.nx * spec.a);
  const double gy = 2.0 * kPi / (spec.ny * spec.a);
  std::vector<Vec2> ks;
  ks.reserve(spec.sites());
  for (int i : mode_indices(spec.nx)) {
    for (int j : mode_indices(spec.ny)) ks.push_back({i * gx, j * gy});
  }
  return ks;
}

std::vector<NeighborShell> neighbor_shells(const LatticeSpec& spec, int max_shell) {
  if (max_shell != 1 && max_shell != 2) {
    throw DomainError("unsupported neighbor shell count " + std::to_string(max_shell) +
                      " (only 1 or 2)");
  }
  std::vector<NeighborShell> shells;
  shells.push_back({spec.a, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}});
  if (max_shell == 2) {
    shells.push_back({std::sqrt(2.0) * spec.a, {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}});
  }
  return shells;
}

}  // namespace latticepol
