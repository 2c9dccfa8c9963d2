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

#include "channel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "specfun.hpp"

namespace edfade::channel {

namespace {

double require_omega(const WeibullChannel& ch) {
  if (!ch.omega)
    throw std::domain_error(
        "channel: envelope-domain operation needs the mean power omega");
  return *ch.omega;
}

}  // namespace

WeibullChannel::WeibullChannel(double severity, double avg_snr,
                               std::optional<double> mean_power)
    : a(severity), gamma_bar(avg_snr), omega(mean_power) {
  if (!(a > 0.0)) throw std::domain_error("channel: severity a must be > 0");
  if (!(gamma_bar > 0.0))
    throw std::domain_error("channel: average SNR must be > 0");
  if (omega && !(*omega > 0.0))
    throw std::domain_error("channel: mean power omega must be > 0");
}

double pdf_envelope(const WeibullChannel& ch, double r) {
  double omega = require_omega(ch);
  if (!(r >= 0.0)) throw std::domain_error("pdf_envelope: r must be >= 0");
  double g = std::exp(specfun::log_gamma(1.0 + 2.0 / ch.a));
  double scale = std::pow(g / omega, 0.5 * ch.a);
  if (r == 0.0) {
    if (ch.a > 1.0) return 0.0;
    if (ch.a == 1.0) return scale;
    return std::numeric_limits<double>::infinity();
  }
  double z = std::pow(r * r * g / omega, 0.5 * ch.a);
  return ch.a * scale * std::pow(r, ch.a - 1.0) * std::exp(-z);
}

double cdf_envelope(const WeibullChannel& ch, double r) {
  double omega = require_omega(ch);
  if (!(r >= 0.0)) throw std::domain_error("cdf_envelope: r must be >= 0");
  if (r == 0.0) return 0.0;
  double g = std::exp(specfun::log_gamma(1.0 + 2.0 / ch.a));
  return -std::expm1(-std::pow(r * r * g / omega, 0.5 * ch.a));
}

double pdf_snr(const WeibullChannel& ch, double gamma) {
  if (!(gamma >= 0.0)) throw std::domain_error("pdf_snr: gamma must be >= 0");
  double g = std::exp(specfun::log_gamma(1.0 + 2.0 / ch.a));
  double half_a = 0.5 * ch.a;
  if (gamma == 0.0) {
    if (ch.a > 2.0) return 0.0;
    if (ch.a == 2.0) return 1.0 / ch.gamma_bar;  // exponential density at 0
    return std::numeric_limits<double>::infinity();
  }
  double z = std::pow(gamma * g / ch.gamma_bar, half_a);
  return half_a * std::pow(g / ch.gamma_bar, half_a) *
         std::pow(gamma, half_a - 1.0) * std::exp(-z);
}

double cdf_snr(const WeibullChannel& ch, double gamma) {
  if (!(gamma >= 0.0)) throw std::domain_error("cdf_snr: gamma must be >= 0");
  if (gamma == 0.0) return 0.0;
  double g = std::exp(specfun::log_gamma(1.0 + 2.0 / ch.a));
  return -std::expm1(-std::pow(gamma * g / ch.gamma_bar, 0.5 * ch.a));
}

double envelope_moment(const WeibullChannel& ch, int n) {
  if (n < 1) throw std::domain_error("envelope_moment: n must be >= 1");
  return std::exp(specfun::log_gamma(1.0 + static_cast<double>(n) / ch.a));
}

double weibull_constant_A(double a) {
  if (!(a > 0.0)) throw std::domain_error("weibull_constant_A: a must be > 0");
  return std::exp(0.5 * a * specfun::log_gamma(1.0 + 2.0 / a));
}

double snr_from_uniform(const WeibullChannel& ch, double u) {
  if (!(u > 0.0) || !(u < 1.0))
    throw std::domain_error("snr_from_uniform: u must lie in (0,1)");
  double g = std::exp(specfun::log_gamma(1.0 + 2.0 / ch.a));
  return ch.gamma_bar / g * std::pow(-std::log(u), 2.0 / ch.a);
}

double sample_snr(const WeibullChannel& ch, CounterRng& rng) {
  return snr_from_uniform(ch, rng.next_uniform());
}

}  // namespace edfade::channel
