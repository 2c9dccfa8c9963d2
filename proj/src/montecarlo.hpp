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

#ifndef EDFADE_MONTECARLO_HPP
#define EDFADE_MONTECARLO_HPP

#include <cstdint>
#include <optional>

#include "channel.hpp"
#include "detector.hpp"
#include "rng.hpp"

namespace edfade::mc {

enum class Hypothesis { kH0, kH1 };

// What to simulate. The channel may be omitted for noise-only (H0)
// runs; detection (H1) runs require it. Identical specs reproduce
// identical reports bit for bit, independent of worker count: every
// trial draws from its own counter-based substream keyed by
// (seed, trial index).
struct SimSpec {
  detector::DetectorConfig cfg;
  std::optional<channel::WeibullChannel> ch;
  std::uint64_t trials;
  std::uint64_t seed;
  Hypothesis hypothesis;
};

struct SimReport {
  double estimate;
  std::uint64_t trials;
  std::uint64_t seed;
  double half_width_95;  // 1.96 sqrt(est (1-est) / trials)
  Hypothesis hypothesis;
};

// One draw of the detector test statistic at instantaneous SNR gamma:
// the sum of squares of 2u independent unit normals with the first
// component's mean shifted to sqrt(2 gamma). For gamma = 0 this is a
// central chi-square with 2u degrees of freedom.
double sample_test_statistic(int u, double gamma, CounterRng& rng);

// Empirical false-alarm (H0) or average detection (H1) probability;
// detection is counted when the statistic strictly exceeds lambda.
SimReport estimate_detection(const SimSpec& spec);

}  // namespace edfade::mc

#endif  // EDFADE_MONTECARLO_HPP
