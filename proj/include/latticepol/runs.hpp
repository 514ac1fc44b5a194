#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latticepol/peaks.hpp"
#include "latticepol/scenario.hpp"
#include "latticepol/spectra.hpp"

namespace latticepol {

enum class OutputFormat { kCsv, kJson };
OutputFormat parse_output_format(std::string_view name);

enum class DispersionKind { kExciton, kPhoton, kPolariton, kHopfield };
DispersionKind parse_dispersion_kind(std::string_view name);

/// Ordered key/value pairs written at the top of every output.
using Metadata = std::vector<std::pair<std::string, std::string>>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Fixed 12-significant-digit formatting used for every emitted number.
std::string format_number(double v);

Metadata scenario_metadata(const Scenario& s, std::string_view command);

/// Per-k rows over Scenario::k_sweep(). Column sets:
///   exciton   k, omega_exciton
///   photon    k, omega_photon
///   polariton k, omega_exciton, omega_photon, omega_upper, omega_lower
///   hopfield  k, X2_upper, Y2_upper, X2_lower, Y2_lower
Table run_dispersion(const Scenario& s, DispersionKind kind);

struct PeakSet {
  double k = 0.0;
  std::vector<Peak> transmission;
  std::vector<Peak> reflection_dips;  // peaks of 1 - R
  std::vector<Peak> absorption;
};

struct SpectraRun {
  std::vector<SpectralResponse> responses;
  std::vector<PeakSet> peaks;
  double max_sum_rule_deviation = 0.0;
};

/// Every k is computed before anything is returned; a failure at any k
/// propagates and no partial result exists.
SpectraRun run_spectra(const Scenario& s, std::span<const double> k_list);

/// Diagnostic quantities in emission order.
Metadata run_check(const Scenario& s);

struct OracleReport {
  int ed_nx = 0;
  int ed_ny = 0;
  double ed_lattice_sum_deviation = 0.0;  // relative to 4 (|J1| + |J2|)
  bool ed_paper_eq8_checked = false;     // only when J2 == 0
  double ed_paper_eq8_deviation = 0.0;
  double two_level_eigen_deviation = 0.0;   // relative to Delta_k
  double two_level_weight_deviation = 0.0;  // absolute on |X|^2, |Y|^2
  double tolerance = 1e-10;
  bool pass = false;
};

/// Runs the hopping-matrix oracle on the configured lattice (or on a 6x6
/// lattice with the same constant when the configured one is too large)
/// and the 2x2 eigen oracle over the k sweep.
OracleReport run_oracle(const Scenario& s);

struct RenderedOutput {
  std::string text;
  std::string summary;  // spectra peak summary (JSON) for CSV output
  int status = 0;       // 0 ok, 4 oracle mismatch
};

RenderedOutput render_dispersion(const Scenario& s, DispersionKind kind, OutputFormat fmt);
RenderedOutput render_spectra(const Scenario& s, OutputFormat fmt);
RenderedOutput render_check(const Scenario& s, OutputFormat fmt);
RenderedOutput render_oracle(const Scenario& s, OutputFormat fmt);

}  // namespace latticepol
