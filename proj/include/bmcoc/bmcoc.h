/*
 * bmcoc C interface.
 *
 * All functions return BMCOC_OK (0) or a negative error code. The message for
 * the most recent failure on the calling thread is available from
 * bmcoc_last_error(). Handles are opaque and must be released with the
 * matching *_destroy function; destroy functions accept NULL.
 *
 * String outputs use the (buf, *len) convention: on entry *len is the buffer
 * size, on return it is the required size including the terminating NUL. When
 * buf is NULL or too small, BMCOC_ERROR_INSUFFICIENT_BUFFER is returned and
 * nothing is written.
 */
#ifndef BMCOC_H_
#define BMCOC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BMCOC_API __declspec(dllexport)
#else
#define BMCOC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum bmcoc_error {
  BMCOC_OK = 0,
  BMCOC_ERROR_CONFIG = -1,
  BMCOC_ERROR_NUMERIC = -2,
  BMCOC_ERROR_NULL_POINTER = -3,
  BMCOC_ERROR_INVALID_ARGUMENT = -4,
  BMCOC_ERROR_INSUFFICIENT_BUFFER = -5,
  BMCOC_ERROR_IO = -6,
  BMCOC_ERROR_UNKNOWN = -100
};

enum bmcoc_gate { BMCOC_GATE_AND = 0, BMCOC_GATE_ON = 1 };
enum bmcoc_detector { BMCOC_DETECTOR_STANDARD = 0, BMCOC_DETECTOR_BLIND = 1 };

/* Bit flags for the sweep entry points. */
#define BMCOC_GATES_AND 1u
#define BMCOC_GATES_ON 2u
#define BMCOC_DETECTORS_STANDARD 1u
#define BMCOC_DETECTORS_BLIND 2u

typedef struct bmcoc_params_struct* bmcoc_params_t;
typedef struct bmcoc_run_struct* bmcoc_run_t;
typedef struct bmcoc_sweep_struct* bmcoc_sweep_t;

BMCOC_API const char* bmcoc_error_description(int err);
BMCOC_API const char* bmcoc_last_error(void);

/* Parameters. */
BMCOC_API int bmcoc_params_default(bmcoc_params_t* out);
BMCOC_API int bmcoc_params_load_text(bmcoc_params_t* out, const char* text);
BMCOC_API int bmcoc_params_load_file(bmcoc_params_t* out, const char* path);
BMCOC_API int bmcoc_params_destroy(bmcoc_params_t params);
BMCOC_API int bmcoc_params_get(bmcoc_params_t params, const char* key, double* value);
/* Sets one key and re-validates; the handle is unchanged on failure. Setting
 * n_pulses, samples_per_pulse or t_p re-derives j_tot and t_total. */
BMCOC_API int bmcoc_params_set(bmcoc_params_t params, const char* key, double value);
BMCOC_API int bmcoc_params_serialize(bmcoc_params_t params, char* buf, size_t* len);

/* One end-to-end run with the default seeded bit patterns. */
BMCOC_API int bmcoc_simulate(bmcoc_params_t params, int gate, int detector, int production_noise,
                             int production_delay, uint64_t run_index, bmcoc_run_t* out);
BMCOC_API int bmcoc_run_destroy(bmcoc_run_t run);
BMCOC_API int bmcoc_run_rlc(bmcoc_run_t run, double* rlc);
/* tp, tn, fp, fn in that order. */
BMCOC_API int bmcoc_run_counts(bmcoc_run_t run, uint64_t counts[4]);
BMCOC_API int bmcoc_run_threshold(bmcoc_run_t run, size_t pulse, double* threshold);
/* Per-sample trace and the one-row summary. */
BMCOC_API int bmcoc_run_samples_csv(bmcoc_run_t run, char* buf, size_t* len);
BMCOC_API int bmcoc_run_report_csv(bmcoc_run_t run, char* buf, size_t* len);

/* Monte Carlo sweeps. scenarios is a bit set: bit (2*noise + delay) enables
 * that noise/delay combination, so 1 selects only the noise-free,
 * delay-free scenario and 15 selects all four. values may be NULL to use the
 * default grid. */
BMCOC_API int bmcoc_sweep_delay(bmcoc_params_t params, unsigned gates, unsigned detectors,
                                unsigned scenarios, const double* values, size_t n_values,
                                int repeats, uint64_t seed, bmcoc_sweep_t* out);
BMCOC_API int bmcoc_sweep_concentration(bmcoc_params_t params, unsigned gates, unsigned detectors,
                                        unsigned scenarios, const double* values, size_t n_values,
                                        int repeats, uint64_t seed, bmcoc_sweep_t* out);
BMCOC_API int bmcoc_sweep_destroy(bmcoc_sweep_t sweep);
BMCOC_API int bmcoc_sweep_points(bmcoc_sweep_t sweep, size_t* n_points);
BMCOC_API int bmcoc_sweep_point(bmcoc_sweep_t sweep, size_t index, int* gate, int* detector,
                                double* x_value, double* rlc_mean, double* rlc_std);
BMCOC_API int bmcoc_sweep_runs_csv(bmcoc_sweep_t sweep, char* buf, size_t* len);
BMCOC_API int bmcoc_sweep_summary_csv(bmcoc_sweep_t sweep, char* buf, size_t* len);

/* pH after each reading for one gate, both detectors (standard rows first). */
BMCOC_API int bmcoc_saturation_csv(bmcoc_params_t params, int gate, int n_readings, char* buf,
                                   size_t* len);

BMCOC_API int bmcoc_manifest(bmcoc_params_t params, const char* description, char* buf,
                             size_t* len);

/* Electrochemistry and unit helpers. */
BMCOC_API int bmcoc_ph_after_addition(double base_pH, double added, double* pH);
BMCOC_API int bmcoc_current_from_ph(bmcoc_params_t params, double pH, double* current_nA);
BMCOC_API int bmcoc_chamber_volumes(double r_ch, double h_ch1, double d_ch2, double h_ch2,
                                    double w_ch2, double* population, double* diffusion);
BMCOC_API int bmcoc_convert_concentration(double value, const char* from_unit, const char* to_unit,
                                          double* out);

#ifdef __cplusplus
}
#endif

#endif
