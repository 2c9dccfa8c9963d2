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

#ifndef EDFADE_SPECFUN_HPP
#define EDFADE_SPECFUN_HPP

namespace edfade::specfun {

// Truncation policy for the series evaluators. A series stops once
// `consecutive_small` successive terms fall below rel_tol times the
// running sum while decreasing in magnitude, and fails if max_terms is
// reached first. Values are immutable; the defaults suit all internal
// uses.
struct SeriesControl {
  double rel_tol = 1e-12;
  int max_terms = 10000;
  int consecutive_small = 3;

  void validate() const;  // throws std::domain_error on bad fields
};

// ln Gamma(x) for x > 0. Lanczos approximation with a compensated
// leading term; exp(result) carries <= ~1e-13 relative error over
// [1e-3, 170].
double log_gamma(double x);

// Regularized upper incomplete gamma Q(u,x) = Gamma(u,x)/Gamma(u).
// u > 0, x >= 0. Power series below x = u+1, Lentz continued fraction
// above; absolute error <= 1e-12. Monotone nonincreasing in x.
double reg_upper_gamma(double u, double x);

// Inverse of reg_upper_gamma in its second argument: the x >= 0 with
// Q(u, x) = q, for 0 < q <= 1. Bracketing plus safeguarded
// Newton/bisection refinement; |Q(u, result) - q| <= 1e-12.
double inv_reg_upper_gamma(double u, double q);

// Exponentially scaled modified Bessel function exp(-x) I_n(x),
// integer n >= 0, x >= 0. Relative error <= 1e-12 for x <= 700.
double bessel_i_scaled(int order, double x);

// Generalized Marcum Q_u(alpha, beta) for integer u >= 1, evaluated as
// the Poisson mixture of regularized gamma tails
//   sum_k exp(-m) m^k / k! * Q(u+k, beta^2/2),   m = alpha^2/2,
// summed outward from the Poisson mode with the gamma tail updated by
// recurrence. Absolute error <= 1e-10; clamped to [0,1].
double marcum_q(int order, double alpha, double beta,
                const SeriesControl& ctrl = SeriesControl{});

// Kummer confluent hypergeometric 1F1(a;b;x) via forward term
// recursion, for a > 0, b > 0, x >= 0 (all series terms positive).
// kummer_1f1_log returns ln 1F1 and never overflows; kummer_1f1
// returns the plain value. Relative error <= 1e-10.
double kummer_1f1_log(double a, double b, double x,
                      const SeriesControl& ctrl = SeriesControl{});
double kummer_1f1(double a, double b, double x,
                  const SeriesControl& ctrl = SeriesControl{});

// ln of the Pochhammer symbol (a)_n = Gamma(a+n)/Gamma(a), a > 0.
double pochhammer_log(double a, int n);

// Clamps a computed probability to [0,1]. Excursions beyond
// max_excursion (default contract: 1e-9) indicate a loss of accuracy
// and raise AccuracyError.
double clamp_probability(double p, double max_excursion = 1e-9);

}  // namespace edfade::specfun

#endif  // EDFADE_SPECFUN_HPP
