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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "detector.hpp"
#include "doctest.h"
#include "error.hpp"
#include "montecarlo.hpp"
#include "util.hpp"

using namespace edfade;
using namespace edfade::detector;
using edfade::channel::WeibullChannel;

TEST_CASE("false-alarm probability") {
  CHECK(prob_false_alarm(DetectorConfig(3, 1e-12)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(prob_false_alarm(DetectorConfig(1, 2.0 * std::log(10.0))) -
                 0.1) <= 1e-13);
  CHECK_THROWS_AS(DetectorConfig(0, 1.0), std::domain_error);
  CHECK_THROWS_AS(DetectorConfig(5, 0.0), std::domain_error);
}

TEST_CASE("threshold solving round-trips") {
  CHECK(std::abs(threshold_for_pf(1, 0.1) - 2.0 * std::log(10.0)) <= 1e-10);
  for (int u : {1, 2, 5, 10}) {
    for (double pf : {0.01, 0.1, 0.2, 0.5, 0.9}) {
      double lambda = threshold_for_pf(u, pf);
      CAPTURE(u);
      CAPTURE(pf);
      CHECK(std::abs(prob_false_alarm(DetectorConfig(u, lambda)) - pf) <=
            1e-10);
    }
  }
  CHECK_THROWS_AS(threshold_for_pf(5, 0.0), std::domain_error);
  CHECK_THROWS_AS(threshold_for_pf(5, 1.0), std::domain_error);
  CHECK_THROWS_AS(threshold_for_pf(5, 1.5), std::domain_error);
}

TEST_CASE("AWGN detection probability limits") {
  for (int u : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}) {
    DetectorConfig cfg(u, threshold_for_pf(u, 0.17));
    CHECK(std::abs(prob_detection_awgn(cfg, 0.0) - prob_false_alarm(cfg)) <=
          1e-10);
  }
  DetectorConfig cfg(5, threshold_for_pf(5, 0.1));
  CHECK(prob_detection_awgn(cfg, 1e4) >= 1.0 - 1e-9);
}

TEST_CASE("AWGN detection probability agrees with direct sampling") {
  DetectorConfig cfg(5, threshold_for_pf(5, 0.1));
  double gamma = 10.0;
  const std::uint64_t n = 10000000;
  std::uint64_t hits = 0;
  for (std::uint64_t trial = 0; trial < n; ++trial) {
    CounterRng rng(31337, trial);
    if (mc::sample_test_statistic(5, gamma, rng) > cfg.lambda) ++hits;
  }
  double p = prob_detection_awgn(cfg, gamma);
  double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  CHECK(std::abs(static_cast<double>(hits) / n - p) <= 3.0 * sigma);
}

TEST_CASE("series evaluation matches independently computed values") {
  // References computed with 40-digit arithmetic / independent
  // quadrature of the fading average.
  struct Ref {
    int u;
    double pf, a, snr_db, pd;
  };
  const Ref refs[] = {
      {5, 0.1, 2.5, 10.0, 0.7539604700560748},
      {5, 0.2, 1.0, 10.0, 0.5889734905857823},
      {5, 0.2, 1.0, 25.0, 0.898089181577478},
      {1, 0.1, 2.0, std::log10(5.0) * 10.0, 0.6812920690579612},
  };
  for (const Ref& r : refs) {
    CAPTURE(r.a);
    CAPTURE(r.snr_db);
    DetectorConfig cfg(r.u, threshold_for_pf(r.u, r.pf));
    WeibullChannel ch(r.a, db_to_linear(r.snr_db));
    AvgPdResult s = avg_pd_weibull_series(cfg, ch);
    CHECK(s.method == Method::kSeries);
    CHECK(s.terms_used > 0);
    CHECK(std::abs(s.value - r.pd) <= 1e-9);
    AvgPdResult q = avg_pd_weibull_quadrature(cfg, ch);
    CHECK(q.method == Method::kQuadrature);
    CHECK(std::abs(q.value - r.pd) <= 1e-9);
    CHECK(std::abs(q.value - s.value) <= 1e-8);
  }
}

TEST_CASE("quadrature limits") {
  DetectorConfig cfg(5, threshold_for_pf(5, 0.1));
  WeibullChannel tiny(2.0, 1e-12);
  AvgPdResult r = avg_pd_weibull_quadrature(cfg, tiny);
  CHECK(std::abs(r.value - prob_false_alarm(cfg)) <= 1e-8);

  DetectorConfig open_gate(5, 1e-8);
  WeibullChannel ch(1.5, 3.0);
  CHECK(avg_pd_weibull_quadrature(open_gate, ch).value >= 1.0 - 1e-9);

  CHECK_THROWS_AS(avg_pd_weibull_quadrature(cfg, ch, 0.0), std::domain_error);
}

TEST_CASE("series reports failure at severe-cancellation points") {
  // Strong severity at low SNR: the alternating terms grow far beyond
  // the unit-interval result before decaying, so truncation cannot
  // deliver the value.
  DetectorConfig cfg(5, threshold_for_pf(5, 0.1));
  WeibullChannel hard(5.0, 1.0);
  CHECK_THROWS_AS(avg_pd_weibull_series(cfg, hard), ConvergenceError);

  AvgPdResult r = avg_pd(cfg, hard);
  CHECK(r.method == Method::kQuadrature);
  CHECK(std::abs(r.value - avg_pd_weibull_quadrature(cfg, hard).value) <=
        1e-12);
}

TEST_CASE("dispatch equals the series where the series converges") {
  DetectorConfig cfg(5, threshold_for_pf(5, 0.1));
  WeibullChannel easy(2.5, 10.0);
  AvgPdResult d = avg_pd(cfg, easy);
  AvgPdResult s = avg_pd_weibull_series(cfg, easy);
  CHECK(d.method == Method::kSeries);
  CHECK(d.value == s.value);
}

TEST_CASE("zero-SNR limit recovers the false-alarm probability") {
  for (int u : {1, 2, 5, 10}) {
    for (double pf : {0.1, 0.2}) {
      DetectorConfig cfg(u, threshold_for_pf(u, pf));
      WeibullChannel ch(1.5, 1e-12);
      CAPTURE(u);
      CAPTURE(pf);
      CHECK(std::abs(avg_pd(cfg, ch).value - pf) <= 1e-8);
    }
  }
}

TEST_CASE("average detection probability is monotone") {
  for (double a : {1.0, 2.0, 3.5}) {
    DetectorConfig cfg(5, threshold_for_pf(5, 0.1));
    double prev = 0.0;
    for (double db = -10.0; db <= 25.0; db += 2.5) {
      double pd = avg_pd(cfg, WeibullChannel(a, db_to_linear(db))).value;
      CHECK(pd >= prev - 1e-9);
      CHECK(pd >= prob_false_alarm(cfg) - 1e-9);
      prev = pd;
    }
  }
  // nonincreasing in the threshold
  WeibullChannel ch(2.0, 10.0);
  double prev = 1.0;
  for (double lambda = 2.0; lambda <= 40.0; lambda += 2.0) {
    double pd = avg_pd(DetectorConfig(5, lambda), ch).value;
    CHECK(pd <= prev + 1e-9);
    prev = pd;
  }
}

TEST_CASE("series/quadrature agreement on a spot grid") {
  for (double a : {1.0, 2.0, 3.5}) {
    for (int u : {1, 5}) {
      for (double db : {5.0, 15.0, 25.0}) {
        DetectorConfig cfg(u, threshold_for_pf(u, 0.1));
        WeibullChannel ch(a, db_to_linear(db));
        CAPTURE(a);
        CAPTURE(u);
        CAPTURE(db);
        AvgPdResult q = avg_pd_weibull_quadrature(cfg, ch);
        try {
          AvgPdResult s = avg_pd_weibull_series(cfg, ch);
          CHECK(std::abs(s.value - q.value) <= 1e-8);
        } catch (const ConvergenceError&) {
          // the dispatch path covers these points via quadrature
        }
      }
    }
  }
}

TEST_CASE("operating points stated for the complementary ROC") {
  // Computed values: series (40-digit), quadrature and Monte Carlo all
  // agree on these to the shown digits.
  DetectorConfig cfg(5, threshold_for_pf(5, 0.2));
  struct Pt {
    double snr_db, pm;
  };
  const Pt pts[] = {
      {-5.0, 0.7570096904695215},
      {10.0, 0.4110265094142177},
      {25.0, 0.10191081842252198},
  };
  for (const Pt& p : pts) {
    WeibullChannel ch(1.0, db_to_linear(p.snr_db));
    CAPTURE(p.snr_db);
    CHECK(std::abs(prob_missed(avg_pd(cfg, ch).value) - p.pm) <= 1e-8);
  }
}

TEST_CASE("missed-detection complement") {
  CHECK(prob_missed(1.0) == 0.0);
  CHECK(prob_missed(0.0) == 1.0);
  CHECK(prob_missed(0.59) == doctest::Approx(0.41).epsilon(1e-15));
}

TEST_CASE("series rejects a starved term budget") {
  DetectorConfig cfg(5, threshold_for_pf(5, 0.1));
  WeibullChannel ch(2.0, 10.0);
  specfun::SeriesControl ctrl;
  ctrl.max_terms = 9;
  CHECK_THROWS_AS(avg_pd_weibull_series(cfg, ch, ctrl), std::domain_error);
}

TEST_CASE("result diagnostics are sane") {
  DetectorConfig cfg(5, threshold_for_pf(5, 0.1));
  WeibullChannel ch(2.0, 31.622776601683793);
  for (const AvgPdResult& r :
       {avg_pd_weibull_series(cfg, ch), avg_pd_weibull_quadrature(cfg, ch)}) {
    CHECK(r.value >= 0.0);
    CHECK(r.value <= 1.0);
    CHECK(r.est_error >= 0.0);
    CHECK(r.terms_used > 0);
  }
}
