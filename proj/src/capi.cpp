// Copyright 2026 the edfade authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edfade/edfade.h"

#include <cmath>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "channel.hpp"
#include "detector.hpp"
#include "error.hpp"
#include "montecarlo.hpp"
#include "rng.hpp"
#include "specfun.hpp"
#include "sweep.hpp"

using edfade::AccuracyError;
using edfade::ConvergenceError;

struct edf_channel {
  edfade::channel::WeibullChannel ch;
};

struct edf_rng {
  edfade::CounterRng rng;
};

struct edf_detector {
  edfade::detector::DetectorConfig cfg;
};

struct edf_sweep {
  edfade::sweep::SweepSpec spec;
};

struct edf_sweep_rows {
  edfade::sweep::Kind kind;
  std::vector<edfade::sweep::RocPoint> points;
  std::string csv;   // rendered lazily, cached
  std::string json;  // rendered lazily, cached
};

namespace {

template <typename Fn>
edf_status guarded(Fn&& fn) {
  try {
    fn();
    return EDF_OK;
  } catch (const std::domain_error&) {
    return EDF_ERR_DOMAIN;
  } catch (const ConvergenceError&) {
    return EDF_ERR_CONVERGENCE;
  } catch (const AccuracyError&) {
    return EDF_ERR_ACCURACY;
  } catch (const std::bad_alloc&) {
    return EDF_ERR_INTERNAL;
  } catch (const std::exception&) {
    return EDF_ERR_INTERNAL;
  }
}

edfade::specfun::SeriesControl make_ctrl(double rel_tol, int max_terms) {
  edfade::specfun::SeriesControl ctrl;
  if (rel_tol > 0.0) ctrl.rel_tol = rel_tol;
  if (max_terms > 0) ctrl.max_terms = max_terms;
  return ctrl;
}

}  // namespace

extern "C" {

const char* edf_status_message(edf_status status) {
  switch (status) {
    case EDF_OK:
      return "ok";
    case EDF_ERR_DOMAIN:
      return "argument outside the documented domain";
    case EDF_ERR_CONVERGENCE:
      return "series or quadrature failed to converge";
    case EDF_ERR_ACCURACY:
      return "result failed an internal accuracy check";
    case EDF_ERR_INVALID:
      return "null handle or malformed argument";
    case EDF_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* edf_version(void) { return "1.0.0"; }

/* ---- special functions -------------------------------------------------- */

edf_status edf_log_gamma(double x, double* out) {
  if (!out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::specfun::log_gamma(x); });
}

edf_status edf_reg_upper_gamma(double u, double x, double* out) {
  if (!out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::specfun::reg_upper_gamma(u, x); });
}

edf_status edf_inv_reg_upper_gamma(double u, double q, double* out) {
  if (!out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::specfun::inv_reg_upper_gamma(u, q); });
}

edf_status edf_bessel_i_scaled(int order, double x, double* out) {
  if (!out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::specfun::bessel_i_scaled(order, x); });
}

edf_status edf_marcum_q(int order, double alpha, double beta, double* out) {
  if (!out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::specfun::marcum_q(order, alpha, beta); });
}

edf_status edf_kummer_1f1(double a, double b, double x, double* out) {
  if (!out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::specfun::kummer_1f1(a, b, x); });
}

edf_status edf_kummer_1f1_log(double a, double b, double x, double* out) {
  if (!out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::specfun::kummer_1f1_log(a, b, x); });
}

edf_status edf_pochhammer_log(double a, int n, double* out) {
  if (!out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::specfun::pochhammer_log(a, n); });
}

/* ---- channel -------------------------------------------------------------- */

edf_channel* edf_channel_create(double severity_a, double avg_snr) {
  try {
    return new edf_channel{
        edfade::channel::WeibullChannel(severity_a, avg_snr)};
  } catch (...) {
    return nullptr;
  }
}

void edf_channel_free(edf_channel* ch) { delete ch; }

edf_status edf_channel_set_mean_power(edf_channel* ch, double omega) {
  if (!ch) return EDF_ERR_INVALID;
  if (!(omega > 0.0)) return EDF_ERR_DOMAIN;
  ch->ch.omega = omega;
  return EDF_OK;
}

edf_status edf_channel_pdf_snr(const edf_channel* ch, double snr,
                               double* out) {
  if (!ch || !out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::channel::pdf_snr(ch->ch, snr); });
}

edf_status edf_channel_cdf_snr(const edf_channel* ch, double snr,
                               double* out) {
  if (!ch || !out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::channel::cdf_snr(ch->ch, snr); });
}

edf_status edf_channel_pdf_envelope(const edf_channel* ch, double r,
                                    double* out) {
  if (!ch || !out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::channel::pdf_envelope(ch->ch, r); });
}

edf_status edf_channel_cdf_envelope(const edf_channel* ch, double r,
                                    double* out) {
  if (!ch || !out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::channel::cdf_envelope(ch->ch, r); });
}

edf_status edf_envelope_moment(const edf_channel* ch, int n, double* out) {
  if (!ch || !out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::channel::envelope_moment(ch->ch, n); });
}

edf_status edf_weibull_constant(double severity_a, double* out) {
  if (!out) return EDF_ERR_INVALID;
  return guarded(
      [&] { *out = edfade::channel::weibull_constant_A(severity_a); });
}

/* ---- rng ------------------------------------------------------------------ */

edf_rng* edf_rng_create(uint64_t seed, uint64_t stream) {
  return new (std::nothrow) edf_rng{edfade::CounterRng(seed, stream)};
}

void edf_rng_free(edf_rng* rng) { delete rng; }

edf_status edf_rng_uniform(edf_rng* rng, double* out) {
  if (!rng || !out) return EDF_ERR_INVALID;
  *out = rng->rng.next_uniform();
  return EDF_OK;
}

edf_status edf_channel_sample_snr(const edf_channel* ch, edf_rng* rng,
                                  double* out) {
  if (!ch || !rng || !out) return EDF_ERR_INVALID;
  return guarded(
      [&] { *out = edfade::channel::sample_snr(ch->ch, rng->rng); });
}

/* ---- detector -------------------------------------------------------------- */

edf_detector* edf_detector_create(int u, double lambda) {
  try {
    return new edf_detector{edfade::detector::DetectorConfig(u, lambda)};
  } catch (...) {
    return nullptr;
  }
}

edf_detector* edf_detector_create_for_pf(int u, double pf_target) {
  try {
    double lambda = edfade::detector::threshold_for_pf(u, pf_target);
    return new edf_detector{edfade::detector::DetectorConfig(u, lambda)};
  } catch (...) {
    return nullptr;
  }
}

void edf_detector_free(edf_detector* det) { delete det; }

edf_status edf_detector_lambda(const edf_detector* det, double* out) {
  if (!det || !out) return EDF_ERR_INVALID;
  *out = det->cfg.lambda;
  return EDF_OK;
}

edf_status edf_threshold_for_pf(int u, double pf_target, double* out) {
  if (!out) return EDF_ERR_INVALID;
  return guarded(
      [&] { *out = edfade::detector::threshold_for_pf(u, pf_target); });
}

edf_status edf_prob_false_alarm(const edf_detector* det, double* out) {
  if (!det || !out) return EDF_ERR_INVALID;
  return guarded([&] { *out = edfade::detector::prob_false_alarm(det->cfg); });
}

edf_status edf_prob_detection_awgn(const edf_detector* det, double snr,
                                   double* out) {
  if (!det || !out) return EDF_ERR_INVALID;
  return guarded(
      [&] { *out = edfade::detector::prob_detection_awgn(det->cfg, snr); });
}

edf_status edf_prob_missed(double pd, double* out) {
  if (!out) return EDF_ERR_INVALID;
  if (!(pd >= 0.0) || !(pd <= 1.0)) return EDF_ERR_DOMAIN;
  *out = edfade::detector::prob_missed(pd);
  return EDF_OK;
}

edf_status edf_avg_pd(const edf_detector* det, const edf_channel* ch,
                      edf_method method, double rel_tol, int max_terms,
                      double* value, int* terms_used, edf_method* method_used,
                      double* est_error) {
  if (!det || !ch || !value) return EDF_ERR_INVALID;
  return guarded([&] {
    edfade::specfun::SeriesControl ctrl = make_ctrl(rel_tol, max_terms);
    edfade::detector::AvgPdResult r;
    switch (method) {
      case EDF_METHOD_SERIES:
        r = edfade::detector::avg_pd_weibull_series(det->cfg, ch->ch, ctrl);
        break;
      case EDF_METHOD_QUADRATURE:
        r = edfade::detector::avg_pd_weibull_quadrature(det->cfg, ch->ch);
        break;
      case EDF_METHOD_AUTO:
      default:
        r = edfade::detector::avg_pd(det->cfg, ch->ch, ctrl);
        break;
    }
    *value = r.value;
    if (terms_used) *terms_used = r.terms_used;
    if (method_used)
      *method_used = r.method == edfade::detector::Method::kSeries
                         ? EDF_METHOD_SERIES
                         : EDF_METHOD_QUADRATURE;
    if (est_error) *est_error = r.est_error;
  });
}

/* ---- simulator ------------------------------------------------------------- */

edf_status edf_sample_test_statistic(int u, double snr, edf_rng* rng,
                                     double* out) {
  if (!rng || !out) return EDF_ERR_INVALID;
  return guarded(
      [&] { *out = edfade::mc::sample_test_statistic(u, snr, rng->rng); });
}

edf_status edf_simulate(const edf_detector* det, const edf_channel* ch,
                        edf_hypothesis hypothesis, uint64_t trials,
                        uint64_t seed, double* estimate,
                        double* half_width_95) {
  if (!det || !estimate) return EDF_ERR_INVALID;
  return guarded([&] {
    edfade::mc::SimSpec spec{
        det->cfg,
        ch ? std::optional(ch->ch) : std::nullopt,
        trials,
        seed,
        hypothesis == EDF_H1 ? edfade::mc::Hypothesis::kH1
                             : edfade::mc::Hypothesis::kH0,
    };
    edfade::mc::SimReport rep = edfade::mc::estimate_detection(spec);
    *estimate = rep.estimate;
    if (half_width_95) *half_width_95 = rep.half_width_95;
  });
}

/* ---- sweep ------------------------------------------------------------------ */

edf_sweep* edf_sweep_create(edf_sweep_kind kind, int u) {
  if (u < 1) return nullptr;
  auto* sw = new (std::nothrow) edf_sweep{};
  if (!sw) return nullptr;
  sw->spec.kind = kind == EDF_SWEEP_COMP_ROC ? edfade::sweep::Kind::kCompRoc
                                             : edfade::sweep::Kind::kPdVsSnr;
  sw->spec.u = u;
  sw->spec.pf_grid = edfade::sweep::default_pf_grid();
  return sw;
}

void edf_sweep_free(edf_sweep* sw) { delete sw; }

edf_status edf_sweep_set_a_values(edf_sweep* sw, const double* a,
                                  size_t count) {
  if (!sw || !a || count == 0) return EDF_ERR_INVALID;
  sw->spec.a_values.assign(a, a + count);
  return EDF_OK;
}

edf_status edf_sweep_set_pf_fixed(edf_sweep* sw, double pf) {
  if (!sw) return EDF_ERR_INVALID;
  if (!(pf > 0.0) || !(pf < 1.0)) return EDF_ERR_DOMAIN;
  sw->spec.pf_fixed = pf;
  return EDF_OK;
}

edf_status edf_sweep_set_snr_db_range(edf_sweep* sw, double start, double stop,
                                      double step) {
  if (!sw) return EDF_ERR_INVALID;
  if (!(step > 0.0) || stop < start) return EDF_ERR_DOMAIN;
  sw->spec.snr_db_start = start;
  sw->spec.snr_db_stop = stop;
  sw->spec.snr_db_step = step;
  return EDF_OK;
}

edf_status edf_sweep_set_snr_db_fixed(edf_sweep* sw, double snr_db) {
  if (!sw) return EDF_ERR_INVALID;
  sw->spec.snr_db_fixed = snr_db;
  return EDF_OK;
}

edf_status edf_sweep_set_pf_grid(edf_sweep* sw, const double* pf,
                                 size_t count) {
  if (!sw || !pf || count == 0) return EDF_ERR_INVALID;
  for (size_t i = 0; i < count; ++i)
    if (!(pf[i] > 0.0) || !(pf[i] < 1.0)) return EDF_ERR_DOMAIN;
  sw->spec.pf_grid.assign(pf, pf + count);
  return EDF_OK;
}

edf_status edf_sweep_set_pf_grid_log(edf_sweep* sw, double pf_min,
                                     double pf_max, size_t count) {
  if (!sw) return EDF_ERR_INVALID;
  if (!(pf_min > 0.0) || !(pf_max < 1.0) || !(pf_min < pf_max) || count < 2)
    return EDF_ERR_DOMAIN;
  std::vector<double> grid(count);
  double lo = std::log(pf_min), hi = std::log(pf_max);
  for (size_t i = 0; i < count; ++i)
    grid[i] =
        std::exp(lo + (hi - lo) * static_cast<double>(i) /
                          static_cast<double>(count - 1));
  sw->spec.pf_grid = std::move(grid);
  return EDF_OK;
}

edf_status edf_sweep_set_engine(edf_sweep* sw, edf_engine engine,
                                uint64_t trials, uint64_t seed) {
  if (!sw) return EDF_ERR_INVALID;
  sw->spec.engine = engine == EDF_ENGINE_SIMULATE
                        ? edfade::sweep::Engine::kSimulate
                        : edfade::sweep::Engine::kAnalytic;
  if (trials > 0) sw->spec.trials = trials;
  sw->spec.seed = seed;
  return EDF_OK;
}

edf_status edf_sweep_run(const edf_sweep* sw, edf_sweep_rows** rows) {
  if (!sw || !rows) return EDF_ERR_INVALID;
  return guarded([&] {
    auto points = edfade::sweep::run(sw->spec);
    *rows = new edf_sweep_rows{sw->spec.kind, std::move(points), {}, {}};
  });
}

void edf_sweep_rows_free(edf_sweep_rows* rows) { delete rows; }

size_t edf_sweep_rows_count(const edf_sweep_rows* rows) {
  return rows ? rows->points.size() : 0;
}

edf_status edf_sweep_rows_get(const edf_sweep_rows* rows, size_t index,
                              edf_roc_point* out) {
  if (!rows || !out) return EDF_ERR_INVALID;
  if (index >= rows->points.size()) return EDF_ERR_INVALID;
  const edfade::sweep::RocPoint& p = rows->points[index];
  out->pf = p.pf;
  out->pd = p.pd;
  out->pm = p.pm;
  out->a = p.a;
  out->snr_db = p.snr_db;
  out->lambda = p.lambda;
  out->est_error = p.est_error;
  out->u = p.u;
  out->method = p.method.c_str();
  return EDF_OK;
}

const char* edf_sweep_rows_csv(edf_sweep_rows* rows) {
  if (!rows) return nullptr;
  if (rows->csv.empty())
    rows->csv = edfade::sweep::to_csv(rows->kind, rows->points);
  return rows->csv.c_str();
}

const char* edf_sweep_rows_json(edf_sweep_rows* rows) {
  if (!rows) return nullptr;
  if (rows->json.empty())
    rows->json = edfade::sweep::to_json(rows->kind, rows->points);
  return rows->json.c_str();
}

} /* extern "C" */
