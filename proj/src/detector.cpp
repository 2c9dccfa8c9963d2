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

#include "detector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "error.hpp"
#include "util.hpp"

namespace edfade::detector {

namespace {

// A series whose max term exceeds this many times the final sum has
// cancelled away too many digits for the 1e-8 oracle-agreement budget
// (per-term log-domain synthesis carries ~1e-13 relative error).
constexpr double kCancellationGate = 1e6;

// Per-term magnitudes above exp(690) cannot be represented; the sum is
// already known to be numerically meaningless long before that.
constexpr double kLogOverflow = 690.0;

constexpr int kGrowthFailures = 10;

}  // namespace

DetectorConfig::DetectorConfig(int time_bandwidth, double threshold)
    : u(time_bandwidth), lambda(threshold) {
  if (u < 1) throw std::domain_error("detector: u must be a positive integer");
  if (!(lambda > 0.0)) throw std::domain_error("detector: lambda must be > 0");
}

double prob_false_alarm(const DetectorConfig& cfg) {
  return specfun::reg_upper_gamma(cfg.u, 0.5 * cfg.lambda);
}

double threshold_for_pf(int u, double pf_target) {
  if (u < 1) throw std::domain_error("threshold_for_pf: u must be >= 1");
  if (!(pf_target > 0.0) || !(pf_target < 1.0))
    throw std::domain_error("threshold_for_pf: pf must lie in (0,1)");
  return 2.0 * specfun::inv_reg_upper_gamma(u, pf_target);
}

double prob_detection_awgn(const DetectorConfig& cfg, double gamma) {
  if (!(gamma >= 0.0))
    throw std::domain_error("prob_detection_awgn: gamma must be >= 0");
  return specfun::marcum_q(cfg.u, std::sqrt(2.0 * gamma),
                           std::sqrt(cfg.lambda));
}

// ---------------------------------------------------------------------------
// closed-form series

namespace {

// ln |term_l| of the alternating sum; sign is (-1)^l.
double series_log_term(int l, const DetectorConfig& cfg,
                       const channel::WeibullChannel& ch, double log_A,
                       const specfun::SeriesControl& inner_ctrl) {
  double la2 = 0.5 * l * ch.a;
  double log_1f1 =
      specfun::kummer_1f1_log(la2 + 1.0, cfg.u + 1.0, 0.5 * cfg.lambda,
                              inner_ctrl);
  return l * log_A + cfg.u * std::log(cfg.lambda) - 0.5 * cfg.lambda +
         specfun::log_gamma(la2 + 1.0) + log_1f1 -
         specfun::log_gamma(l + 1.0) - specfun::log_gamma(cfg.u + 1.0) -
         cfg.u * std::numbers::ln2 - la2 * std::log(ch.gamma_bar);
}

}  // namespace

AvgPdResult avg_pd_weibull_series(const DetectorConfig& cfg,
                                  const channel::WeibullChannel& ch,
                                  const specfun::SeriesControl& ctrl) {
  ctrl.validate();
  if (ctrl.max_terms < 10)
    throw std::domain_error("avg_pd_weibull_series: max_terms must be >= 10");

  // The inner 1F1 always runs at machine precision: the outer sum
  // cancels, so term values cannot afford the outer rel_tol.
  specfun::SeriesControl inner = ctrl;
  inner.rel_tol = 1e-15;
  inner.max_terms = std::max(ctrl.max_terms, 10000);

  const double log_A = 0.5 * ch.a * specfun::log_gamma(1.0 + 2.0 / ch.a);

  // Finite block: e^(-lambda/2) sum_{l<u} (lambda/2)^l / l!, computed as
  // the regularized gamma tail it equals for integer u.
  const double first_block = specfun::reg_upper_gamma(cfg.u, 0.5 * cfg.lambda);

  CompensatedSum sum;
  sum.add(first_block);

  double max_mag = 0.0;
  double prev_mag = std::numeric_limits<double>::infinity();
  int smalls = 0;
  int growths = 0;
  int l = 0;
  bool converged = false;
  for (; l < ctrl.max_terms; ++l) {
    double log_mag = series_log_term(l, cfg, ch, log_A, inner);
    if (log_mag > kLogOverflow)
      throw ConvergenceError(
          "avg_pd_weibull_series: term overflow at l=" + std::to_string(l) +
          " (largest term ~1e" +
          std::to_string(static_cast<int>(max_mag > 0 ? std::log10(max_mag)
                                                      : 0)) +
          ")");
    double mag = std::exp(log_mag);
    sum.add(l % 2 == 0 ? mag : -mag);
    max_mag = std::max(max_mag, mag);

    if (l >= 1 && mag < ctrl.rel_tol * std::abs(sum.value()) &&
        mag <= prev_mag) {
      if (++smalls >= ctrl.consecutive_small) {
        converged = true;
        ++l;
        break;
      }
    } else {
      smalls = 0;
    }
    if (l >= 1 && mag > prev_mag &&
        mag > 1e6 * std::max(std::abs(sum.value()), 1.0)) {
      if (++growths >= kGrowthFailures)
        throw ConvergenceError(
            "avg_pd_weibull_series: terms diverge (largest " +
            std::to_string(max_mag) + ", current " + std::to_string(mag) +
            ")");
    } else {
      growths = 0;
    }
    prev_mag = mag;
  }
  if (!converged)
    throw ConvergenceError("avg_pd_weibull_series: max_terms (" +
                           std::to_string(ctrl.max_terms) +
                           ") reached before the tolerance");

  double raw = sum.value();
  double ratio = max_mag / std::max(std::abs(raw), 1e-300);
  if (ratio > kCancellationGate)
    throw ConvergenceError(
        "avg_pd_weibull_series: cancellation ratio " + std::to_string(ratio) +
        " exceeds the gate; largest term " + std::to_string(max_mag));

  // First omitted term, the conventional truncation heuristic.
  double est_error = std::exp(series_log_term(l, cfg, ch, log_A, inner));

  return AvgPdResult{specfun::clamp_probability(raw), l, Method::kSeries,
                     est_error};
}

// ---------------------------------------------------------------------------
// quadrature oracle

namespace {

// 7/15-point Gauss-Kronrod pair on [-1, 1] (QUADPACK dqk15 constants).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, err;
};

template <typename F>
Panel gauss_kronrod(const F& f, double lo, double hi, long& evals) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  double fk[15];
  for (int i = 0; i < 7; ++i) {
    fk[i] = f(c - h * kKronrodNodes[i]);
    fk[14 - i] = f(c + h * kKronrodNodes[i]);
  }
  fk[7] = f(c);
  evals += 15;
  double kronrod = 0.0, gauss = 0.0;
  for (int i = 0; i < 7; ++i)
    kronrod += kKronrodWeights[i] * (fk[i] + fk[14 - i]);
  kronrod += kKronrodWeights[7] * fk[7];
  for (int i = 0; i < 3; ++i)
    gauss += kGaussWeights[i] * (fk[2 * i + 1] + fk[13 - 2 * i]);
  gauss += kGaussWeights[3] * fk[7];
  return Panel{lo, hi, kronrod * h, std::abs(kronrod - gauss) * h};
}

}  // namespace

AvgPdResult avg_pd_weibull_quadrature(const DetectorConfig& cfg,
                                      const channel::WeibullChannel& ch,
                                      double abs_tol) {
  if (!(abs_tol > 0.0))
    throw std::domain_error("avg_pd_weibull_quadrature: abs_tol must be > 0");

  const double g = std::exp(specfun::log_gamma(1.0 + 2.0 / ch.a));
  const double scale = ch.gamma_bar / g;
  const double two_over_a = 2.0 / ch.a;
  const double sqrt_lambda = std::sqrt(cfg.lambda);
  long evals = 0;
  const long kBudget = 1000000;

  auto integrand = [&](double t) {
    double gamma = scale * std::pow(t, two_over_a);
    return std::exp(-t) *
           specfun::marcum_q(cfg.u, std::sqrt(2.0 * gamma), sqrt_lambda);
  };

  // Upper cut with exp(-T) below a tenth of the tolerance; the omitted
  // tail is then closed with the lower bound f(T) e^(-T) (the integrand
  // factor is nondecreasing in t), leaving at most (1-f(T)) e^(-T).
  const double T = std::log(10.0 / std::min(abs_tol, 0.1));

  // Geometric seed panels resolve the detection boundary layer the
  // integrand develops near t = 0 when the average SNR is large, which
  // a single panel's sample points would step straight over.
  std::vector<Panel> work;
  {
    double hi = T;
    for (int k = 0; k < 48; ++k) {
      double lo = hi * 0.5;
      work.push_back(gauss_kronrod(integrand, lo, hi, evals));
      hi = lo;
    }
    work.push_back(gauss_kronrod(integrand, 0.0, hi, evals));
  }

  auto total_err = [&work] {
    double e = 0.0;
    for (const Panel& p : work) e += p.err;
    return e;
  };

  while (total_err() > 0.5 * abs_tol) {
    if (evals > kBudget)
      throw ConvergenceError(
          "avg_pd_weibull_quadrature: evaluation budget exhausted");
    auto worst = std::max_element(
        work.begin(), work.end(),
        [](const Panel& x, const Panel& y) { return x.err < y.err; });
    Panel p = *worst;
    work.erase(worst);
    double mid = 0.5 * (p.lo + p.hi);
    if (mid <= p.lo || mid >= p.hi)
      throw ConvergenceError(
          "avg_pd_weibull_quadrature: panel can no longer be split");
    work.push_back(gauss_kronrod(integrand, p.lo, mid, evals));
    work.push_back(gauss_kronrod(integrand, mid, p.hi, evals));
  }

  CompensatedSum sum;
  // Deterministic accumulation order regardless of refinement history.
  std::sort(work.begin(), work.end(),
            [](const Panel& x, const Panel& y) { return x.lo < y.lo; });
  for (const Panel& p : work) sum.add(p.value);
  double f_at_T = integrand(T);  // already includes exp(-T)
  sum.add(f_at_T);
  double est_error = total_err() + (std::exp(-T) - f_at_T);

  return AvgPdResult{specfun::clamp_probability(sum.value()),
                     static_cast<int>(evals), Method::kQuadrature, est_error};
}

AvgPdResult avg_pd(const DetectorConfig& cfg, const channel::WeibullChannel& ch,
                   const specfun::SeriesControl& ctrl) {
  try {
    return avg_pd_weibull_series(cfg, ch, ctrl);
  } catch (const ConvergenceError&) {
  } catch (const AccuracyError&) {
  }
  return avg_pd_weibull_quadrature(cfg, ch, 1e-10);
}

}  // namespace edfade::detector
