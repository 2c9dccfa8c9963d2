/* Copyright 2026 the edfade authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* edfade -- energy-detector performance metrics over Weibull fading channels.
 *
 * C interface of the shared library. All functions return an edf_status;
 * numeric results go through out-parameters. Stateful objects (channels,
 * detectors, random streams, sweeps) are opaque handles with create/free
 * pairs. Handles are immutable after creation unless a setter is documented,
 * and all computational entry points are safe to call concurrently on
 * distinct handles; edf_rng is the one stateful object and must not be
 * shared between threads.
 */

#ifndef EDFADE_EDFADE_H
#define EDFADE_EDFADE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EDFADE_API __declspec(dllexport)
#else
#define EDFADE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum edf_status {
  EDF_OK = 0,
  EDF_ERR_DOMAIN = 1,      /* argument outside the documented domain */
  EDF_ERR_CONVERGENCE = 2, /* series or quadrature failed to converge */
  EDF_ERR_ACCURACY = 3,    /* result failed an internal accuracy check */
  EDF_ERR_INVALID = 4,     /* null handle or malformed argument */
  EDF_ERR_INTERNAL = 5
} edf_status;

EDFADE_API const char *edf_status_message(edf_status status);
EDFADE_API const char *edf_version(void);

/* ---- special-function kernel ------------------------------------------- */

/* ln Gamma(x), x > 0. exp(result) is accurate to ~1e-13 relative for
 * x in [1e-3, 170]. */
EDFADE_API edf_status edf_log_gamma(double x, double *out);

/* Regularized upper incomplete gamma Q(u, x) = Gamma(u,x)/Gamma(u),
 * u > 0, x >= 0. Absolute error <= 1e-12. */
EDFADE_API edf_status edf_reg_upper_gamma(double u, double x, double *out);

/* Inverse of the above in x: returns x with Q(u, x) = q, 0 < q <= 1. */
EDFADE_API edf_status edf_inv_reg_upper_gamma(double u, double q, double *out);

/* exp(-x) I_n(x) for integer order n >= 0, x >= 0. */
EDFADE_API edf_status edf_bessel_i_scaled(int order, double x, double *out);

/* Generalized Marcum Q_u(alpha, beta), integer u >= 1. Absolute error
 * <= 1e-10; result clamped to [0, 1]. */
EDFADE_API edf_status edf_marcum_q(int order, double alpha, double beta,
                                   double *out);

/* Kummer confluent hypergeometric 1F1(a; b; x) for a > 0, b > 0, x >= 0,
 * and its logarithm (use the log form when the value would overflow). */
EDFADE_API edf_status edf_kummer_1f1(double a, double b, double x,
                                     double *out);
EDFADE_API edf_status edf_kummer_1f1_log(double a, double b, double x,
                                         double *out);

/* ln of the Pochhammer symbol (a)_n, a > 0, n >= 0. */
EDFADE_API edf_status edf_pochhammer_log(double a, int n, double *out);

/* ---- Weibull fading channel -------------------------------------------- */

typedef struct edf_channel edf_channel;

/* severity_a > 0; avg_snr (linear, not dB) > 0. NULL on invalid input. */
EDFADE_API edf_channel *edf_channel_create(double severity_a, double avg_snr);
EDFADE_API void edf_channel_free(edf_channel *ch);

/* Mean signal power for envelope-domain operations; SNR-domain
 * operations never require it. */
EDFADE_API edf_status edf_channel_set_mean_power(edf_channel *ch,
                                                 double omega);

EDFADE_API edf_status edf_channel_pdf_snr(const edf_channel *ch, double snr,
                                          double *out);
EDFADE_API edf_status edf_channel_cdf_snr(const edf_channel *ch, double snr,
                                          double *out);
EDFADE_API edf_status edf_channel_pdf_envelope(const edf_channel *ch, double r,
                                               double *out);
EDFADE_API edf_status edf_channel_cdf_envelope(const edf_channel *ch, double r,
                                               double *out);

/* n-th moment of the unit-scale (normalized) envelope: Gamma(1 + n/a). */
EDFADE_API edf_status edf_envelope_moment(const edf_channel *ch, int n,
                                          double *out);

/* The derivation constant [Gamma(1 + 2/a)]^(a/2). */
EDFADE_API edf_status edf_weibull_constant(double severity_a, double *out);

/* ---- random streams ----------------------------------------------------- */

/* Counter-based generator (Philox4x32-10). Streams with distinct
 * (seed, stream) pairs are statistically independent. */
typedef struct edf_rng edf_rng;

EDFADE_API edf_rng *edf_rng_create(uint64_t seed, uint64_t stream);
EDFADE_API void edf_rng_free(edf_rng *rng);

/* Uniform draw on the open interval (0, 1). */
EDFADE_API edf_status edf_rng_uniform(edf_rng *rng, double *out);

/* Inverse-CDF draw of the instantaneous SNR for the given channel. */
EDFADE_API edf_status edf_channel_sample_snr(const edf_channel *ch,
                                             edf_rng *rng, double *out);

/* ---- energy detector ----------------------------------------------------- */

typedef struct edf_detector edf_detector;

/* u >= 1 is the time-bandwidth product; lambda > 0 the decision threshold. */
EDFADE_API edf_detector *edf_detector_create(int u, double lambda);
/* Convenience: solve lambda so that the false-alarm probability equals
 * pf_target in (0, 1). */
EDFADE_API edf_detector *edf_detector_create_for_pf(int u, double pf_target);
EDFADE_API void edf_detector_free(edf_detector *det);

EDFADE_API edf_status edf_detector_lambda(const edf_detector *det,
                                          double *out);
EDFADE_API edf_status edf_threshold_for_pf(int u, double pf_target,
                                           double *out);

EDFADE_API edf_status edf_prob_false_alarm(const edf_detector *det,
                                           double *out);
/* Detection probability in AWGN at instantaneous SNR `snr` (linear). */
EDFADE_API edf_status edf_prob_detection_awgn(const edf_detector *det,
                                              double snr, double *out);
EDFADE_API edf_status edf_prob_missed(double pd, double *out);

typedef enum edf_method {
  EDF_METHOD_AUTO = 0,
  EDF_METHOD_SERIES = 1,
  EDF_METHOD_QUADRATURE = 2
} edf_method;

/* Average detection probability over the fading channel.
 *
 * method selects the closed-form series, the adaptive-quadrature
 * evaluation of the fading average, or automatic dispatch (series with
 * quadrature fallback). rel_tol/max_terms control series truncation;
 * pass rel_tol <= 0 or max_terms <= 0 for the defaults (1e-12, 10000).
 * terms_used, method_used and est_error are optional diagnostics and may
 * be NULL. */
EDFADE_API edf_status edf_avg_pd(const edf_detector *det,
                                 const edf_channel *ch, edf_method method,
                                 double rel_tol, int max_terms, double *value,
                                 int *terms_used, edf_method *method_used,
                                 double *est_error);

/* ---- Monte Carlo simulator ---------------------------------------------- */

/* One draw of the detector test statistic at instantaneous SNR `snr`:
 * the sum of squares of 2u unit normals, one of them mean-shifted by
 * sqrt(2*snr). */
EDFADE_API edf_status edf_sample_test_statistic(int u, double snr,
                                                edf_rng *rng, double *out);

typedef enum edf_hypothesis { EDF_H0 = 0, EDF_H1 = 1 } edf_hypothesis;

/* Empirical estimate of the false-alarm (H0) or average detection (H1)
 * probability. ch may be NULL for H0 and is required for H1. Estimates
 * are bit-reproducible for a fixed (seed, trials, parameters) tuple,
 * independent of the number of worker threads. half_width_95 (optional)
 * receives the normal-approximation 95% confidence half-width. */
EDFADE_API edf_status edf_simulate(const edf_detector *det,
                                   const edf_channel *ch,
                                   edf_hypothesis hypothesis, uint64_t trials,
                                   uint64_t seed, double *estimate,
                                   double *half_width_95);

/* ---- parameter sweeps ---------------------------------------------------- */

typedef enum edf_sweep_kind {
  EDF_SWEEP_PD_VS_SNR = 0,
  EDF_SWEEP_COMP_ROC = 1
} edf_sweep_kind;

typedef enum edf_engine {
  EDF_ENGINE_ANALYTIC = 0,
  EDF_ENGINE_SIMULATE = 1
} edf_engine;

typedef struct edf_sweep edf_sweep;
typedef struct edf_sweep_rows edf_sweep_rows;

/* One emitted sweep point. pm == 1 - pd; method is "series",
 * "quadrature" or "simulate". */
typedef struct edf_roc_point {
  double pf;
  double pd;
  double pm;
  double a;
  double snr_db;
  double lambda;
  double est_error;
  int u;
  const char *method;
} edf_roc_point;

EDFADE_API edf_sweep *edf_sweep_create(edf_sweep_kind kind, int u);
EDFADE_API void edf_sweep_free(edf_sweep *sw);

EDFADE_API edf_status edf_sweep_set_a_values(edf_sweep *sw, const double *a,
                                             size_t count);
/* pd-vs-snr sweeps: fixed false-alarm target and an SNR grid in dB. */
EDFADE_API edf_status edf_sweep_set_pf_fixed(edf_sweep *sw, double pf);
EDFADE_API edf_status edf_sweep_set_snr_db_range(edf_sweep *sw, double start,
                                                 double stop, double step);
/* complementary-ROC sweeps: fixed average SNR and a false-alarm grid. */
EDFADE_API edf_status edf_sweep_set_snr_db_fixed(edf_sweep *sw, double snr_db);
EDFADE_API edf_status edf_sweep_set_pf_grid(edf_sweep *sw, const double *pf,
                                            size_t count);
EDFADE_API edf_status edf_sweep_set_pf_grid_log(edf_sweep *sw, double pf_min,
                                                double pf_max, size_t count);
EDFADE_API edf_status edf_sweep_set_engine(edf_sweep *sw, edf_engine engine,
                                           uint64_t trials, uint64_t seed);

EDFADE_API edf_status edf_sweep_run(const edf_sweep *sw,
                                    edf_sweep_rows **rows);

EDFADE_API void edf_sweep_rows_free(edf_sweep_rows *rows);
EDFADE_API size_t edf_sweep_rows_count(const edf_sweep_rows *rows);
EDFADE_API edf_status edf_sweep_rows_get(const edf_sweep_rows *rows,
                                         size_t index, edf_roc_point *out);

/* CSV / JSON renderings of the rows. The returned strings are owned by
 * the rows handle and remain valid until it is freed. Both use 12
 * significant digits and LF line endings; the CSV starts with the header
 * kind,u,a,snr_db,pf,lambda,pd,pm,method,est_error */
EDFADE_API const char *edf_sweep_rows_csv(edf_sweep_rows *rows);
EDFADE_API const char *edf_sweep_rows_json(edf_sweep_rows *rows);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* EDFADE_EDFADE_H */
