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

#ifndef EDFADE_CHANNEL_HPP
#define EDFADE_CHANNEL_HPP

#include <optional>

#include "rng.hpp"

namespace edfade::channel {

// Weibull fading environment. `a` is the fading severity (a = 2 is
// Rayleigh, a = 1 an exponential envelope; larger a means milder
// fading); gamma_bar is the average SNR per symbol in linear units.
// omega, the mean signal power, is needed only by the envelope-domain
// operations; the SNR-domain pipeline never touches it.
struct WeibullChannel {
  double a;
  double gamma_bar;
  std::optional<double> omega;

  WeibullChannel(double severity, double avg_snr,
                 std::optional<double> mean_power = std::nullopt);
};

// Envelope density and distribution ( require omega ).
double pdf_envelope(const WeibullChannel& ch, double r);
double cdf_envelope(const WeibullChannel& ch, double r);

// Instantaneous-SNR density and distribution. The density integrates
// to 1 and has mean gamma_bar.
double pdf_snr(const WeibullChannel& ch, double gamma);
double cdf_snr(const WeibullChannel& ch, double gamma);

// n-th moment of the unit-scale normalized envelope: Gamma(1 + n/a).
double envelope_moment(const WeibullChannel& ch, int n);

// [Gamma(1 + 2/a)]^(a/2), evaluated in the log domain.
double weibull_constant_A(double a);

// Inverse transform behind sample_snr:
// gamma = gamma_bar / Gamma(1+2/a) * (-ln u)^(2/a), u in (0,1).
// Exactly inverts cdf_snr (up to rounding).
double snr_from_uniform(const WeibullChannel& ch, double u);

// Inverse-CDF draw with U from the caller-owned stream.
double sample_snr(const WeibullChannel& ch, CounterRng& rng);

}  // namespace edfade::channel

#endif  // EDFADE_CHANNEL_HPP
