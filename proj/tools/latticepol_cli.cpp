// Command-line front end. Talks to the simulator only through the C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "latticepol/latticepol.h"

namespace {

struct ScenarioDeleter {
  void operator()(lp_scenario* s) const { lp_scenario_free(s); }
};
struct ResultDeleter {
  void operator()(lp_result* r) const { lp_result_free(r); }
};
using ScenarioPtr = std::unique_ptr<lp_scenario, ScenarioDeleter>;
using ResultPtr = std::unique_ptr<lp_result, ResultDeleter>;

struct CommonOptions {
  std::string config;
  std::string preset;
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  auto* cfg = cmd->add_option("--config", opts.config, "Scenario config file (JSON)");
  auto* pre = cmd->add_option("--preset", opts.preset, "Built-in scenario preset");
  cfg->excludes(pre);
  cmd->add_option("--out", opts.out, "Output path (default: stdout)");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
}

// Writes via a temporary file so a failed run never leaves partial output.
bool write_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) return false;
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) return false;
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

int report(lp_status st) {
  std::cerr << "latticepol: " << lp_last_error() << "\n";
  return static_cast<int>(st);
}

int load(const CommonOptions& opts, ScenarioPtr& out) {
  lp_scenario* raw = nullptr;
  lp_status st;
  if (!opts.config.empty()) {
    st = lp_scenario_from_file(opts.config.c_str(), &raw);
  } else if (!opts.preset.empty()) {
    st = lp_scenario_from_preset(opts.preset.c_str(), &raw);
  } else {
    std::cerr << "latticepol: one of --config or --preset is required\n";
    return LP_ERR_CONFIG;
  }
  if (st != LP_OK) return report(st);
  out.reset(raw);
  return 0;
}

lp_format format_of(const CommonOptions& opts) {
  return opts.format == "json" ? LP_FORMAT_JSON : LP_FORMAT_CSV;
}

int deliver(const CommonOptions& opts, lp_status st, lp_result* raw,
            const std::string& summary_path = {}) {
  ResultPtr result(raw);
  if (st != LP_OK && st != LP_ERR_ORACLE) return report(st);

  const std::string text = lp_result_text(result.get());
  const std::string summary = lp_result_summary(result.get());
  std::string summary_target = summary_path;
  if (summary_target.empty() && !opts.out.empty() && !summary.empty()) {
    summary_target = opts.out + ".peaks.json";
  }
  if (opts.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
  } else if (!write_atomic(opts.out, text)) {
    std::cerr << "latticepol: cannot write " << opts.out << "\n";
    return LP_ERR_INTERNAL;
  }
  if (!summary_target.empty() && !summary.empty() && !write_atomic(summary_target, summary)) {
    std::cerr << "latticepol: cannot write " << summary_target << "\n";
    return LP_ERR_INTERNAL;
  }
  if (st == LP_ERR_ORACLE) return report(st);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Excitons and cavity polaritons of atoms in a 2D optical lattice"};
  app.set_version_flag("--version", std::string("latticepol ") + lp_version());
  app.require_subcommand(1);

  CommonOptions check_opts, disp_opts, hop_opts, spec_opts, oracle_opts;
  std::string what = "polariton";
  std::string summary_path;

  auto* check = app.add_subcommand("check", "Transfer energies, observability and coupling summary");
  add_common(check, check_opts);

  auto* disp = app.add_subcommand("dispersion", "Exciton, photon and polariton dispersions vs k");
  add_common(disp, disp_opts);
  disp->add_option("--what", what, "Series to emit")
      ->check(CLI::IsMember({"exciton", "photon", "polariton", "hopfield"}));

  auto* hop = app.add_subcommand("hopfield", "Exciton and photon weights of both branches vs k");
  add_common(hop, hop_opts);

  auto* spec = app.add_subcommand("spectra", "Transmission, reflection and absorption spectra");
  add_common(spec, spec_opts);
  spec->add_option("--summary", summary_path,
                   "Peak summary JSON path for CSV output (default: <out>.peaks.json)");

  auto* oracle = app.add_subcommand("oracle", "Compare closed forms against numerical diagonalization");
  add_common(oracle, oracle_opts);

  app.add_subcommand("presets", "List built-in presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return LP_ERR_CONFIG;
  }

  if (app.got_subcommand("presets")) {
    for (size_t i = 0; i < lp_preset_count(); ++i) std::cout << lp_preset_name(i) << "\n";
    return 0;
  }

  ScenarioPtr scenario;
  lp_result* result = nullptr;
  if (*check) {
    if (int rc = load(check_opts, scenario)) return rc;
    const lp_status st = lp_run_check(scenario.get(), format_of(check_opts), &result);
    return deliver(check_opts, st, result);
  }
  if (*disp || *hop) {
    const CommonOptions& opts = *disp ? disp_opts : hop_opts;
    lp_series series = LP_SERIES_HOPFIELD;
    if (*disp) {
      if (what == "exciton") series = LP_SERIES_EXCITON;
      else if (what == "photon") series = LP_SERIES_PHOTON;
      else if (what == "polariton") series = LP_SERIES_POLARITON;
    }
    if (int rc = load(opts, scenario)) return rc;
    const lp_status st = lp_run_dispersion(scenario.get(), series, format_of(opts), &result);
    return deliver(opts, st, result);
  }
  if (*spec) {
    if (int rc = load(spec_opts, scenario)) return rc;
    const lp_status st = lp_run_spectra(scenario.get(), format_of(spec_opts), &result);
    return deliver(spec_opts, st, result, summary_path);
  }
  if (int rc = load(oracle_opts, scenario)) return rc;
  const lp_status st = lp_run_oracle(scenario.get(), format_of(oracle_opts), &result);
  return deliver(oracle_opts, st, result);
}
