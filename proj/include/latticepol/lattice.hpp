#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace latticepol {

using Vec2 = std::array<double, 2>;
using Offset = std::array<int, 2>;

/// 2D square lattice with one atom per site.
struct LatticeSpec {
  double a = 0.0;  // lattice constant, m
  int nx = 1;
  int ny = 1;

  [[nodiscard]] std::size_t sites() const {
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  }
  /// S = N a^2.
  [[nodiscard]] double area() const { return static_cast<double>(sites()) * a * a; }

  /// Throws ConfigError unless a > 0 and nx, ny >= 1.
  void validate() const;
};

struct NeighborShell {
  double distance = 0.0;  // m
  std::vector<Offset> offsets;
};

/// Integer mode indices along one axis of length n: [-n/2, n/2) for even n,
/// [-(n-1)/2, (n-1)/2] for odd n. Always exactly n values.
std::vector<int> mode_indices(int n);

/// Wavevectors 2*pi*(i/(nx a), j/(ny a)) over the first Brillouin zone,
/// x index outermost. Size is exactly nx*ny.
std::vector<Vec2> allowed_wavevectors(const LatticeSpec& spec);

/// Shells 1 and 2 of the square lattice. max_shell must be 1 or 2.
std::vector<NeighborShell> neighbor_shells(const LatticeSpec& spec, int max_shell);

}  // namespace latticepol
