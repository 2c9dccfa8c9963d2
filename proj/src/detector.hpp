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

#ifndef EDFADE_DETECTOR_HPP
#define EDFADE_DETECTOR_HPP

#include "channel.hpp"
#include "specfun.hpp"

namespace edfade::detector {

// Radiometer description: u is the (integer) time-bandwidth product,
// lambda the decision threshold in normalized-energy units of the test
// statistic. Detection is declared when the statistic strictly exceeds
// lambda.
struct DetectorConfig {
  int u;
  double lambda;

  DetectorConfig(int time_bandwidth, double threshold);
};

enum class Method { kSeries, kQuadrature };

// Value of an average-detection-probability evaluation plus
// diagnostics. est_error is the magnitude of the first omitted series
// term (a heuristic, not a bound) or the quadrature error estimate.
struct AvgPdResult {
  double value;
  int terms_used;
  Method method;
  double est_error;
};

// False-alarm probability Gamma(u, lambda/2)/Gamma(u); channel free.
double prob_false_alarm(const DetectorConfig& cfg);

// Threshold with prob_false_alarm == pf_target, pf_target in (0,1).
double threshold_for_pf(int u, double pf_target);

// Detection probability in AWGN at instantaneous SNR gamma:
// Q_u(sqrt(2 gamma), sqrt(lambda)).
double prob_detection_awgn(const DetectorConfig& cfg, double gamma);

inline double prob_missed(double pd) { return 1.0 - pd; }

// Average detection probability over the Weibull channel, as the
// closed-form series: a finite Poisson block plus an alternating sum
// whose l-th term carries A^l Gamma(l a/2 + 1) 1F1(l a/2 + 1; u+1;
// lambda/2) / (l! gamma_bar^(l a/2)). Terms are assembled in the log
// domain and combined with compensated summation. Throws
// ConvergenceError when max_terms is hit, when terms grow without
// bound, or when the max-term-to-result ratio exceeds the cancellation
// gate (callers should fall back to quadrature); AccuracyError when the
// clamp excursion check fails.
AvgPdResult avg_pd_weibull_series(
    const DetectorConfig& cfg, const channel::WeibullChannel& ch,
    const specfun::SeriesControl& ctrl = specfun::SeriesControl{});

// Independent evaluation of the same average by adaptive
// Gauss-Kronrod quadrature of the fading integral after the
// substitution gamma = gamma_bar/Gamma(1+2/a) * t^(2/a), which turns
// the Weibull weight into exactly exp(-t). Absolute error <= abs_tol;
// an evaluation budget of 1e6 integrand samples applies.
AvgPdResult avg_pd_weibull_quadrature(const DetectorConfig& cfg,
                                      const channel::WeibullChannel& ch,
                                      double abs_tol = 1e-10);

// Dispatch: series first, quadrature on series failure. The method
// field records which path produced the value.
AvgPdResult avg_pd(const DetectorConfig& cfg,
                   const channel::WeibullChannel& ch,
                   const specfun::SeriesControl& ctrl = specfun::SeriesControl{});

}  // namespace edfade::detector

#endif  // EDFADE_DETECTOR_HPP
