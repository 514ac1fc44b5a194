/* C interface to the latticepol exciton-polariton simulator.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every call returns an lp_status; on failure
 * lp_last_error() holds a message for the calling thread.
 */
#ifndef LATTICEPOL_H
#define LATTICEPOL_H

#include <stddef.h>

#if defined(LATTICEPOL_BUILDING)
#define LP_API __attribute__((visibility("default")))
#else
#define LP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lp_status {
  LP_OK = 0,
  LP_ERR_ARGUMENT = 1, /* null handle or bad enum value */
  LP_ERR_CONFIG = 2,   /* unparseable or invalid scenario */
  LP_ERR_DOMAIN = 3,   /* numerical-domain error, e.g. pole on the real axis */
  LP_ERR_ORACLE = 4,   /* oracle residual above tolerance; result still set */
  LP_ERR_INTERNAL = 5
} lp_status;

typedef enum lp_format { LP_FORMAT_CSV = 0, LP_FORMAT_JSON = 1 } lp_format;

typedef enum lp_series {
  LP_SERIES_EXCITON = 0,
  LP_SERIES_PHOTON = 1,
  LP_SERIES_POLARITON = 2,
  LP_SERIES_HOPFIELD = 3
} lp_series;

typedef struct lp_scenario lp_scenario;
typedef struct lp_result lp_result;

/* Both branches at one in-plane wavevector, rad/s. */
typedef struct lp_polariton_pair {
  double omega_upper;
  double omega_lower;
  double x2_upper, y2_upper; /* Hopfield weights |X|^2, |Y|^2 */
  double x2_lower, y2_lower;
  double gamma_upper, gamma_lower;
  double detuning;
  double half_splitting;
} lp_polariton_pair;

typedef struct lp_spectral_point {
  double t, r, a;
} lp_spectral_point;

LP_API const char* lp_version(void);
LP_API const char* lp_last_error(void);

LP_API lp_status lp_scenario_from_json(const char* text, lp_scenario** out);
LP_API lp_status lp_scenario_from_file(const char* path, lp_scenario** out);
LP_API lp_status lp_scenario_from_preset(const char* name, lp_scenario** out);
LP_API void lp_scenario_free(lp_scenario* s);

/* Canonical config JSON with defaults filled in. */
LP_API lp_status lp_scenario_config_json(const lp_scenario* s, lp_result** out);

/* Active transfer rates J1, J2 (rad/s). */
LP_API lp_status lp_transfer_couplings(const lp_scenario* s, double* j1, double* j2);
LP_API lp_status lp_photon_frequency(const lp_scenario* s, double k, double* omega);
LP_API lp_status lp_exciton_frequency(const lp_scenario* s, double k, double* omega);
LP_API lp_status lp_coupling_modulus(const lp_scenario* s, double k, double* abs_f);
LP_API lp_status lp_polaritons(const lp_scenario* s, double k, lp_polariton_pair* out);
/* T, R, A at probe frequency omega for wavevector k. */
LP_API lp_status lp_spectrum_point(const lp_scenario* s, double k, double omega,
                                   lp_spectral_point* out);

LP_API lp_status lp_run_check(const lp_scenario* s, lp_format fmt, lp_result** out);
LP_API lp_status lp_run_dispersion(const lp_scenario* s, lp_series series, lp_format fmt,
                                   lp_result** out);
/* For CSV output the peak summary JSON is available via lp_result_summary. */
LP_API lp_status lp_run_spectra(const lp_scenario* s, lp_format fmt, lp_result** out);
LP_API lp_status lp_run_oracle(const lp_scenario* s, lp_format fmt, lp_result** out);

LP_API const char* lp_result_text(const lp_result* r);
LP_API size_t lp_result_size(const lp_result* r);
/* Empty string when the run has no separate summary. */
LP_API const char* lp_result_summary(const lp_result* r);
LP_API void lp_result_free(lp_result* r);

/* Number of built-in presets and the name at index i (NULL if out of range). */
LP_API size_t lp_preset_count(void);
LP_API const char* lp_preset_name(size_t i);

#ifdef __cplusplus
}
#endif

#endif /* LATTICEPOL_H */
