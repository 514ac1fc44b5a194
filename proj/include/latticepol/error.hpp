#pragma once

#include <stdexcept>
#include <string>

namespace latticepol {

/// Invalid or unparseable scenario configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input lies outside the domain where a formula is defined
/// (zero separation, flat band, pole on the real axis, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace latticepol
