#include "latticepol/latticepol.h"

#include <exception>
#include <new>
#include <string>

#include "latticepol/error.hpp"
#include "latticepol/runs.hpp"
#include "latticepol/scenario.hpp"

struct lp_scenario {
  latticepol::Scenario scenario;
};

struct lp_result {
  std::string text;
  std::string summary;
};

namespace {

thread_local std::string g_last_error;

lp_status fail(lp_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs body, mapping exceptions onto status codes.
template <typename F>
lp_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const latticepol::ConfigError& e) {
    return fail(LP_ERR_CONFIG, e.what());
  } catch (const latticepol::DomainError& e) {
    return fail(LP_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(LP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LP_ERR_INTERNAL, e.what());
  }
}

lp_status make_scenario(const latticepol::ScenarioConfig& cfg, lp_scenario** out) {
  *out = new lp_scenario{latticepol::resolve(cfg)};
  return LP_OK;
}

bool bad_format(lp_format fmt) { return fmt != LP_FORMAT_CSV && fmt != LP_FORMAT_JSON; }

latticepol::OutputFormat to_format(lp_format fmt) {
  return fmt == LP_FORMAT_JSON ? latticepol::OutputFormat::kJson : latticepol::OutputFormat::kCsv;
}

lp_status emit(latticepol::RenderedOutput r, lp_result** out) {
  *out = new lp_result{std::move(r.text), std::move(r.summary)};
  if (r.status == 4) return fail(LP_ERR_ORACLE, "oracle residual above tolerance");
  return LP_OK;
}

}  // namespace

extern "C" {

const char* lp_version(void) { return LATTICEPOL_VERSION; }

const char* lp_last_error(void) { return g_last_error.c_str(); }

lp_status lp_scenario_from_json(const char* text, lp_scenario** out) {
  if (!text || !out) return fail(LP_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return make_scenario(latticepol::parse_config(text), out); });
}

lp_status lp_scenario_from_file(const char* path, lp_scenario** out) {
  if (!path || !out) return fail(LP_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return make_scenario(latticepol::load_config(path), out); });
}

lp_status lp_scenario_from_preset(const char* name, lp_scenario** out) {
  if (!name || !out) return fail(LP_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { return make_scenario(latticepol::preset_config(name), out); });
}

void lp_scenario_free(lp_scenario* s) { delete s; }

lp_status lp_scenario_config_json(const lp_scenario* s, lp_result** out) {
  if (!s || !out) return fail(LP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new lp_result{latticepol::emit_config(s->scenario.config), {}};
    return LP_OK;
  });
}

lp_status lp_transfer_couplings(const lp_scenario* s, double* j1, double* j2) {
  if (!s || !j1 || !j2) return fail(LP_ERR_ARGUMENT, "null argument");
  *j1 = s->scenario.couplings.j1;
  *j2 = s->scenario.couplings.j2;
  return LP_OK;
}

lp_status lp_photon_frequency(const lp_scenario* s, double k, double* omega) {
  if (!s || !omega) return fail(LP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *omega = s->scenario.photon_frequency(k);
    return LP_OK;
  });
}

lp_status lp_exciton_frequency(const lp_scenario* s, double k, double* omega) {
  if (!s || !omega) return fail(LP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *omega = s->scenario.exciton_frequency(k);
    return LP_OK;
  });
}

lp_status lp_coupling_modulus(const lp_scenario* s, double k, double* abs_f) {
  if (!s || !abs_f) return fail(LP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    *abs_f = std::abs(s->scenario.coupling(k));
    return LP_OK;
  });
}

lp_status lp_polaritons(const lp_scenario* s, double k, lp_polariton_pair* out) {
  if (!s || !out) return fail(LP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto p = s->scenario.polaritons(k);
    *out = {p.upper.omega,          p.lower.omega,          p.upper.exciton_weight(),
            p.upper.photon_weight(), p.lower.exciton_weight(), p.lower.photon_weight(),
            p.upper.gamma,          p.lower.gamma,          p.detuning,
            p.half_splitting};
    return LP_OK;
  });
}

lp_status lp_spectrum_point(const lp_scenario* s, double k, double omega, lp_spectral_point* out) {
  if (!s || !out) return fail(LP_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto pair = s->scenario.polaritons(k);
    const double grid[1] = {omega};
    const auto resp = latticepol::tra_spectra(grid, pair, s->scenario.damping, k);
    *out = {resp.t[0], resp.r[0], resp.a[0]};
    return LP_OK;
  });
}

lp_status lp_run_check(const lp_scenario* s, lp_format fmt, lp_result** out) {
  if (!s || !out || bad_format(fmt)) return fail(LP_ERR_ARGUMENT, "bad argument");
  *out = nullptr;
  return guarded([&] { return emit(latticepol::render_check(s->scenario, to_format(fmt)), out); });
}

lp_status lp_run_dispersion(const lp_scenario* s, lp_series series, lp_format fmt,
                            lp_result** out) {
  if (!s || !out || bad_format(fmt)) return fail(LP_ERR_ARGUMENT, "bad argument");
  *out = nullptr;
  latticepol::DispersionKind kind;
  switch (series) {
    case LP_SERIES_EXCITON:
      kind = latticepol::DispersionKind::kExciton;
      break;
    case LP_SERIES_PHOTON:
      kind = latticepol::DispersionKind::kPhoton;
      break;
    case LP_SERIES_POLARITON:
      kind = latticepol::DispersionKind::kPolariton;
      break;
    case LP_SERIES_HOPFIELD:
      kind = latticepol::DispersionKind::kHopfield;
      break;
    default:
      return fail(LP_ERR_ARGUMENT, "unknown series");
  }
  return guarded(
      [&] { return emit(latticepol::render_dispersion(s->scenario, kind, to_format(fmt)), out); });
}

lp_status lp_run_spectra(const lp_scenario* s, lp_format fmt, lp_result** out) {
  if (!s || !out || bad_format(fmt)) return fail(LP_ERR_ARGUMENT, "bad argument");
  *out = nullptr;
  return guarded(
      [&] { return emit(latticepol::render_spectra(s->scenario, to_format(fmt)), out); });
}

lp_status lp_run_oracle(const lp_scenario* s, lp_format fmt, lp_result** out) {
  if (!s || !out || bad_format(fmt)) return fail(LP_ERR_ARGUMENT, "bad argument");
  *out = nullptr;
  return guarded([&] { return emit(latticepol::render_oracle(s->scenario, to_format(fmt)), out); });
}

const char* lp_result_text(const lp_result* r) { return r ? r->text.c_str() : ""; }

size_t lp_result_size(const lp_result* r) { return r ? r->text.size() : 0; }

const char* lp_result_summary(const lp_result* r) { return r ? r->summary.c_str() : ""; }

void lp_result_free(lp_result* r) { delete r; }

size_t lp_preset_count(void) { return latticepol::preset_names().size(); }

const char* lp_preset_name(size_t i) {
  static const std::vector<std::string> names = latticepol::preset_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

}  // extern "C"
