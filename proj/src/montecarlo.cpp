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

#include "montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "util.hpp"

namespace edfade::mc {

double sample_test_statistic(int u, double gamma, CounterRng& rng) {
  if (u < 1)
    throw std::domain_error("sample_test_statistic: u must be >= 1");
  if (!(gamma >= 0.0))
    throw std::domain_error("sample_test_statistic: gamma must be >= 0");
  double z = rng.next_normal() + std::sqrt(2.0 * gamma);
  double y = z * z;
  for (int i = 1; i < 2 * u; ++i) {
    z = rng.next_normal();
    y += z * z;
  }
  return y;
}

SimReport estimate_detection(const SimSpec& spec) {
  if (spec.trials < 1)
    throw std::domain_error("estimate_detection: trials must be >= 1");
  if (spec.hypothesis == Hypothesis::kH1 && !spec.ch)
    throw std::domain_error(
        "estimate_detection: H1 with fading requires a channel");

  const bool fading = spec.hypothesis == Hypothesis::kH1;
  const double lambda = spec.cfg.lambda;
  const int u = spec.cfg.u;
  std::atomic<std::uint64_t> hits{0};

  parallel_chunks(spec.trials, [&](std::uint64_t begin, std::uint64_t end,
                                   unsigned) {
    std::uint64_t local = 0;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      CounterRng rng(spec.seed, trial);
      double gamma = fading ? channel::sample_snr(*spec.ch, rng) : 0.0;
      if (sample_test_statistic(u, gamma, rng) > lambda) ++local;
    }
    hits.fetch_add(local, std::memory_order_relaxed);
  });

  double est = static_cast<double>(hits.load()) /
               static_cast<double>(spec.trials);
  double hw =
      1.96 * std::sqrt(est * (1.0 - est) / static_cast<double>(spec.trials));
  return SimReport{est, spec.trials, spec.seed, hw, spec.hypothesis};
}

}  // namespace edfade::mc
