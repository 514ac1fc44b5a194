#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latticepol/cavity.hpp"
#include "latticepol/exciton_band.hpp"
#include "latticepol/interactions.hpp"
#include "latticepol/lattice.hpp"
#include "latticepol/polariton.hpp"
#include "latticepol/spectra.hpp"

namespace latticepol {

/// Scenario inputs exactly as written in a config file. Unit-bearing keys
/// carry their unit in the name; rates without a suffix are rad/s and
/// wavevectors are rad/m.
struct ScenarioConfig {
  std::string name;  // free-form label, echoed in output metadata

  struct Atom {
    double omega_a_eV = 0.0;
    double dipole_eA = 0.0;
    double linewidth_eV = 0.0;

    friend bool operator==(const Atom&, const Atom&) = default;
  } atom;

  struct Lattice {
    double constant_A = 0.0;
    int nx = 10;
    int ny = 10;

    friend bool operator==(const Lattice&, const Lattice&) = default;
  } lattice;

  struct Cavity {
    double length_A = 0.0;
    int mode_index = 1;
    double epsilon = 1.0;
    double gamma_up = 0.0;
    double gamma_low = 0.0;

    friend bool operator==(const Cavity&, const Cavity&) = default;
  } cavity;

  struct Exciton {
    double Gamma_ex = 0.0;
    DispersionMode dispersion_mode = DispersionMode::kPaperEq8;
    GeometryMode geometry_mode = GeometryMode::kCollinearPaper;
    /// Pin the k = 0 exciton frequency to the bare cavity resonance.
    bool zero_detuning = false;
    /// Use the full exciton band inside the polariton block instead of its
    /// k = 0 value.
    bool exact_dispersion = false;
    /// Override the computed transfer energies (eV).
    std::optional<double> j1_eV;
    std::optional<double> j2_eV;

    friend bool operator==(const Exciton&, const Exciton&) = default;
  } exciton;

  struct Sweep {
    double k_max = 3e7;
    int k_samples = 301;
    std::vector<double> k_list{0.0};
    std::optional<double> omega_min;
    std::optional<double> omega_max;
    int omega_samples = 2001;

    friend bool operator==(const Sweep&, const Sweep&) = default;
  } sweep;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Parses and validates JSON config text. Unknown keys are rejected.
/// Throws ConfigError with line/column or key context.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical JSON for a config, with every default written out.
std::string emit_config(const ScenarioConfig& config);

std::vector<std::string> preset_names();
/// Config text of a named preset; throws ConfigError for unknown names.
std::string preset_text(std::string_view name);
ScenarioConfig preset_config(std::string_view name);

/// A config resolved into internal units with derived quantities attached.
struct Scenario {
  ScenarioConfig config;
  AtomSpec atom;
  LatticeSpec lattice;
  CavitySpec cavity;
  DampingSpec damping;
  TransferCouplings couplings;  // in the configured geometry (or overridden)
  bool couplings_overridden = false;
  ExcitonBand band;
  /// omega_x used at k ~ 0 in the polariton block.
  double exciton_bottom = 0.0;
  /// exciton_bottom minus the unpinned band bottom (non-zero only with
  /// zero_detuning).
  double detuning_adjust = 0.0;

  /// Exciton frequency fed to the polariton block at |k| (along x).
  [[nodiscard]] double exciton_frequency(double k) const;
  [[nodiscard]] double photon_frequency(double k) const;
  [[nodiscard]] std::complex<double> coupling(double k) const;
  [[nodiscard]] PolaritonPair polaritons(double k) const;
  [[nodiscard]] std::vector<double> k_sweep() const;
  [[nodiscard]] std::vector<double> omega_grid(const PolaritonPair& pair) const;
};

Scenario resolve(const ScenarioConfig& config);

}  // namespace latticepol
