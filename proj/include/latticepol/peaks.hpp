#pragma once

#include <span>
#include <vector>

#include "latticepol/error.hpp"

namespace latticepol {

class NoPeaksFound : public DomainError {
 public:
  using DomainError::DomainError;
};

struct Peak {
  double position = 0.0;  // parabolic vertex through the three top samples
  double height = 0.0;
  double fwhm = 0.0;  // NaN when a half-height crossing falls off the grid
};

/// Local maxima of y(x) at or above rel_threshold * max(y), in ascending x.
/// x must be strictly increasing; spacing may be non-uniform. Widths come
/// from linear interpolation of the half-height crossings on each side.
/// Throws NoPeaksFound if there is no interior maximum.
std::vector<Peak> find_peaks(std::span<const double> x, std::span<const double> y,
                             double rel_threshold = 1e-6);

}  // namespace latticepol
