#include "latticepol/runs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "latticepol/error.hpp"
#include "latticepol/units.hpp"

namespace latticepol {
namespace {

using Json = nlohmann::ordered_json;

std::string bool_text(bool b) { return b ? "true" : "false"; }

Json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_number(v));
}

Json metadata_json(const Metadata& meta) {
  Json j = Json::object();
  for (const auto& [k, v] : meta) j[k] = v;
  return j;
}

std::string csv_header(const Metadata& meta) {
  std::string out;
  for (const auto& [k, v] : meta) out += "# " + k + ": " + v + "\n";
  return out;
}

std::string table_csv(const Metadata& meta, const Table& t) {
  std::string out = csv_header(meta);
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_number(row[i]);
    out += "\n";
  }
  return out;
}

Json table_json(const Metadata& meta, const Table& t) {
  Json j;
  j["metadata"] = metadata_json(meta);
  j["columns"] = t.columns;
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (double v : row) r.push_back(json_number(v));
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

Json peaks_json(const std::vector<Peak>& peaks, const char* height_key) {
  Json arr = Json::array();
  for (const Peak& p : peaks) {
    arr.push_back({{"omega", json_number(p.position)},
                   {height_key, json_number(p.height)},
                   {"fwhm", json_number(p.fwhm)}});
  }
  return arr;
}

std::vector<Peak> peaks_or_empty(std::span<const double> x, std::span<const double> y) {
  try {
    return find_peaks(x, y);
  } catch (const NoPeaksFound&) {
    return {};
  }
}

std::string key_value_csv(const Metadata& meta, const Metadata& body) {
  std::string out = csv_header(meta) + "quantity,value\n";
  for (const auto& [k, v] : body) out += k + "," + v + "\n";
  return out;
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ConfigError("unknown output format '" + std::string(name) + "' (expected csv or json)");
}

DispersionKind parse_dispersion_kind(std::string_view name) {
  if (name == "exciton") return DispersionKind::kExciton;
  if (name == "photon") return DispersionKind::kPhoton;
  if (name == "polariton") return DispersionKind::kPolariton;
  if (name == "hopfield") return DispersionKind::kHopfield;
  throw ConfigError("unknown dispersion series '" + std::string(name) +
                    "' (expected exciton, photon, polariton or hopfield)");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

Metadata scenario_metadata(const Scenario& s, std::string_view command) {
  const auto& c = s.config;
  Metadata m{
      {"generator", std::string("latticepol ") + LATTICEPOL_VERSION},
      {"command", std::string(command)},
      {"scenario", c.name},
      {"config", emit_config(c)},
      {"geometry_mode", std::string(to_string(c.exciton.geometry_mode))},
      {"dispersion_mode", std::string(to_string(c.exciton.dispersion_mode))},
      {"zero_detuning", bool_text(c.exciton.zero_detuning)},
      {"exact_dispersion", bool_text(c.exciton.exact_dispersion)},
      {"couplings_source", s.couplings_overridden ? "override" : "dipole-dipole"},
      {"omega_a_rad_s", format_number(s.atom.omega_a)},
      {"mu_C_m", format_number(s.atom.mu)},
      {"gamma_a_rad_s", format_number(s.atom.gamma_a)},
      {"a_m", format_number(s.lattice.a)},
      {"L_m", format_number(s.cavity.length)},
      {"J1_rad_s", format_number(s.couplings.j1)},
      {"J2_rad_s", format_number(s.couplings.j2)},
      {"omega_c0_rad_s", format_number(s.photon_frequency(0.0))},
      {"exciton_k0_rad_s", format_number(s.exciton_bottom)},
      {"detuning_adjust_rad_s", format_number(s.detuning_adjust)},
      {"abs_f0_rad_s", format_number(std::abs(s.coupling(0.0)))},
      {"gamma_up_rad_s", format_number(s.damping.gamma_u)},
      {"gamma_low_rad_s", format_number(s.damping.gamma_l)},
      {"Gamma_ex_rad_s", format_number(s.damping.gamma_ex)},
      {"units", "omega rad/s, k rad/m"},
      {"float_format", "%.12g"},
  };
  return m;
}

Table run_dispersion(const Scenario& s, DispersionKind kind) {
  Table t;
  switch (kind) {
    case DispersionKind::kExciton:
      t.columns = {"k", "omega_exciton"};
      break;
    case DispersionKind::kPhoton:
      t.columns = {"k", "omega_photon"};
      break;
    case DispersionKind::kPolariton:
      t.columns = {"k", "omega_exciton", "omega_photon", "omega_upper", "omega_lower"};
      break;
    case DispersionKind::kHopfield:
      t.columns = {"k", "X2_upper", "Y2_upper", "X2_lower", "Y2_lower"};
      break;
  }
  for (double k : s.k_sweep()) {
    switch (kind) {
      case DispersionKind::kExciton:
        t.rows.push_back({k, s.exciton_frequency(k)});
        break;
      case DispersionKind::kPhoton:
        t.rows.push_back({k, s.photon_frequency(k)});
        break;
      case DispersionKind::kPolariton: {
        const PolaritonPair p = s.polaritons(k);
        t.rows.push_back(
            {k, s.exciton_frequency(k), s.photon_frequency(k), p.upper.omega, p.lower.omega});
        break;
      }
      case DispersionKind::kHopfield: {
        const PolaritonPair p = s.polaritons(k);
        t.rows.push_back({k, p.upper.exciton_weight(), p.upper.photon_weight(),
                          p.lower.exciton_weight(), p.lower.photon_weight()});
        break;
      }
    }
  }
  return t;
}

SpectraRun run_spectra(const Scenario& s, std::span<const double> k_list) {
  if (k_list.empty()) throw ConfigError("spectra need at least one wavevector");
  SpectraRun run;
  for (double k : k_list) {
    const PolaritonPair pair = s.polaritons(k);
    const std::vector<double> grid = s.omega_grid(pair);
    SpectralResponse resp = tra_spectra(grid, pair, s.damping, k);

    PeakSet ps;
    ps.k = k;
    ps.transmission = peaks_or_empty(resp.omega, resp.t);
    std::vector<double> depth(resp.r.size());
    std::transform(resp.r.begin(), resp.r.end(), depth.begin(), [](double r) { return 1.0 - r; });
    ps.reflection_dips = peaks_or_empty(resp.omega, depth);
    ps.absorption = peaks_or_empty(resp.omega, resp.a);

    run.max_sum_rule_deviation = std::max(run.max_sum_rule_deviation, sum_rule_check(resp));
    run.responses.push_back(std::move(resp));
    run.peaks.push_back(std::move(ps));
  }
  return run;
}

Metadata run_check(const Scenario& s) {
  const auto ev = [](double omega) { return format_number(angular_to_ev(omega)); };
  const TransferCouplings col =
      transfer_parameters(s.atom, s.lattice, GeometryMode::kCollinearPaper);
  const TransferCouplings perp =
      transfer_parameters(s.atom, s.lattice, GeometryMode::kPerpendicularTensor);

  Metadata out{
      {"hbar_J1_eV_collinear_paper", ev(col.j1)},
      {"hbar_J2_eV_collinear_paper", ev(col.j2)},
      {"hbar_J1_eV_perpendicular_tensor", ev(perp.j1)},
      {"hbar_J2_eV_perpendicular_tensor", ev(perp.j2)},
      {"hbar_J1_eV", ev(s.couplings.j1)},
      {"hbar_J2_eV", ev(s.couplings.j2)},
      {"couplings_source", s.couplings_overridden ? "override" : "dipole-dipole"},
      {"band_width_eV", ev(4.0 * s.couplings.j1)},
      {"atom_linewidth_eV", ev(s.atom.gamma_a)},
  };
  if (s.couplings.j1 > 0.0) {
    const Observability obs = observability(s.band, s.atom);
    out.emplace_back("observable", bool_text(obs.observable));
    out.emplace_back("observability_margin", format_number(obs.margin));
  } else {
    out.emplace_back("observable", "undefined (J1 <= 0)");
    out.emplace_back("observability_margin", "nan");
  }
  const double stiffness = s.couplings.j1 + 4.0 * s.couplings.j2;
  out.emplace_back("effective_mass_kg",
                   stiffness != 0.0 ? format_number(effective_mass(s.band)) : "inf");

  const PolaritonPair p0 = s.polaritons(0.0);
  const double abs_f = std::abs(s.coupling(0.0));
  const double gamma = s.damping.gamma();
  const bool strong = 2.0 * abs_f > gamma && 2.0 * abs_f > s.damping.gamma_ex;
  out.emplace_back("exciton_k0_eV", ev(s.exciton_bottom));
  out.emplace_back("photon_k0_eV", ev(s.photon_frequency(0.0)));
  out.emplace_back("detuning_k0_rad_s", format_number(p0.detuning));
  out.emplace_back("abs_f_rad_s", format_number(abs_f));
  out.emplace_back("rabi_splitting_rad_s", format_number(p0.splitting()));
  out.emplace_back("rabi_splitting_eV", ev(p0.splitting()));
  out.emplace_back("gamma_cavity_rad_s", format_number(gamma));
  out.emplace_back("Gamma_ex_rad_s", format_number(s.damping.gamma_ex));
  out.emplace_back("strong_coupling", bool_text(strong));
  return out;
}

OracleReport run_oracle(const Scenario& s) {
  OracleReport rep;
  LatticeSpec lat = s.lattice;
  if (lat.sites() > kOracleMaxSites) lat = {s.lattice.a, 6, 6};
  rep.ed_nx = lat.nx;
  rep.ed_ny = lat.ny;

  // Compare band shifts (omega_a = 0) so the optical frequency does not mask
  // errors at the scale of the couplings.
  ExcitonBand band = s.band;
  band.omega_a = 0.0;
  const double scale = 4.0 * (std::abs(band.couplings.j1) + std::abs(band.couplings.j2));
  const auto deviation = [&](const ExcitonBand& b) {
    const auto ed = hopping_matrix_oracle(lat, b);
    const auto formula = band_spectrum(lat, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < ed.size(); ++i) {
      const double d = std::abs(ed[i] - formula[i]);
      worst = std::max(worst, scale > 0.0 ? d / scale : d);
    }
    return worst;
  };
  band.mode = DispersionMode::kLatticeSum;
  rep.ed_lattice_sum_deviation = deviation(band);
  if (band.couplings.j2 == 0.0) {
    band.mode = DispersionMode::kPaperEq8;
    rep.ed_paper_eq8_checked = true;
    rep.ed_paper_eq8_deviation = deviation(band);
  }

  for (double k : s.k_sweep()) {
    const double wx = s.exciton_frequency(k);
    const double wc = s.photon_frequency(k);
    const auto f = s.coupling(k);
    const PolaritonPair p = branches(wx, wc, f, 0.0);
    const auto o = eigen_oracle(wx, wc, f);
    const double dev = std::max(std::abs(p.upper.omega - o[1].value),
                                std::abs(p.lower.omega - o[0].value)) / p.half_splitting;
    rep.two_level_eigen_deviation = std::max(rep.two_level_eigen_deviation, dev);
    const double wdev = std::max({std::abs(p.upper.exciton_weight() - o[1].exciton_weight),
                                  std::abs(p.upper.photon_weight() - o[1].photon_weight),
                                  std::abs(p.lower.exciton_weight() - o[0].exciton_weight),
                                  std::abs(p.lower.photon_weight() - o[0].photon_weight)});
    rep.two_level_weight_deviation = std::max(rep.two_level_weight_deviation, wdev);
  }

  rep.pass = rep.ed_lattice_sum_deviation <= rep.tolerance &&
             rep.ed_paper_eq8_deviation <= rep.tolerance &&
             rep.two_level_eigen_deviation <= rep.tolerance &&
             rep.two_level_weight_deviation <= rep.tolerance;
  return rep;
}

RenderedOutput render_dispersion(const Scenario& s, DispersionKind kind, OutputFormat fmt) {
  const char* command = kind == DispersionKind::kHopfield ? "hopfield" : "dispersion";
  Metadata meta = scenario_metadata(s, command);
  const Table t = run_dispersion(s, kind);
  RenderedOutput out;
  out.text = fmt == OutputFormat::kCsv ? table_csv(meta, t) : table_json(meta, t).dump(2) + "\n";
  return out;
}

RenderedOutput render_spectra(const Scenario& s, OutputFormat fmt) {
  const SpectraRun run = run_spectra(s, s.config.sweep.k_list);
  Metadata meta = scenario_metadata(s, "spectra");
  bool regulated = false;
  double regulator = 0.0;
  for (const auto& r : run.responses) {
    regulated = regulated || r.regulated;
    regulator = std::max(regulator, r.regulator);
  }
  meta.emplace_back("regulated", bool_text(regulated));
  meta.emplace_back("regulator_rad_s", format_number(regulator));
  meta.emplace_back("closed_mirrors", bool_text(s.damping.gamma() == 0.0));
  meta.emplace_back("max_sum_rule_deviation", format_number(run.max_sum_rule_deviation));

  Table t;
  t.columns = {"k", "omega", "T", "R", "A"};
  for (const auto& r : run.responses) {
    for (std::size_t i = 0; i < r.omega.size(); ++i) {
      t.rows.push_back({r.k, r.omega[i], r.t[i], r.r[i], r.a[i]});
    }
  }

  Json peaks = Json::array();
  for (const auto& ps : run.peaks) {
    peaks.push_back({{"k", json_number(ps.k)},
                     {"transmission", peaks_json(ps.transmission, "height")},
                     {"reflection_dips", peaks_json(ps.reflection_dips, "depth")},
                     {"absorption", peaks_json(ps.absorption, "height")}});
  }

  RenderedOutput out;
  if (fmt == OutputFormat::kCsv) {
    out.text = table_csv(meta, t);
    Json summary;
    summary["metadata"] = metadata_json(meta);
    summary["peaks"] = std::move(peaks);
    out.summary = summary.dump(2) + "\n";
  } else {
    Json j = table_json(meta, t);
    j["peaks"] = std::move(peaks);
    out.text = j.dump(2) + "\n";
  }
  return out;
}

RenderedOutput render_check(const Scenario& s, OutputFormat fmt) {
  const Metadata meta = scenario_metadata(s, "check");
  const Metadata body = run_check(s);
  RenderedOutput out;
  if (fmt == OutputFormat::kCsv) {
    out.text = key_value_csv(meta, body);
  } else {
    Json j;
    j["metadata"] = metadata_json(meta);
    j["check"] = metadata_json(body);
    out.text = j.dump(2) + "\n";
  }
  return out;
}

RenderedOutput render_oracle(const Scenario& s, OutputFormat fmt) {
  const Metadata meta = scenario_metadata(s, "oracle");
  const OracleReport rep = run_oracle(s);
  const Metadata body{
      {"ed_lattice", std::to_string(rep.ed_nx) + "x" + std::to_string(rep.ed_ny)},
      {"ed_lattice_sum_deviation", format_number(rep.ed_lattice_sum_deviation)},
      {"ed_paper_eq8_deviation",
       rep.ed_paper_eq8_checked ? format_number(rep.ed_paper_eq8_deviation) : "skipped (J2 != 0)"},
      {"two_level_eigen_deviation", format_number(rep.two_level_eigen_deviation)},
      {"two_level_weight_deviation", format_number(rep.two_level_weight_deviation)},
      {"tolerance", format_number(rep.tolerance)},
      {"pass", bool_text(rep.pass)},
  };
  RenderedOutput out;
  out.status = rep.pass ? 0 : 4;
  if (fmt == OutputFormat::kCsv) {
    out.text = key_value_csv(meta, body);
  } else {
    Json j;
    j["metadata"] = metadata_json(meta);
    j["oracle"] = metadata_json(body);
    out.text = j.dump(2) + "\n";
  }
  return out;
}

}  // namespace latticepol
