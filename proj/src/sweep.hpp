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

#ifndef EDFADE_SWEEP_HPP
#define EDFADE_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace edfade::sweep {

enum class Kind { kPdVsSnr, kCompRoc };
enum class Engine { kAnalytic, kSimulate };

// Grid description for one curve family.
//  - pd_vs_snr: fixed pf, SNR grid (start/stop/step in dB), one curve
//    per entry of a_values.
//  - comp_roc: fixed SNR (dB), false-alarm grid, one curve per a.
// engine selects the analytic evaluator (series with quadrature
// fallback) or the Monte Carlo simulator; simulate derives one
// independent seed per grid point from `seed`.
struct SweepSpec {
  Kind kind = Kind::kPdVsSnr;
  int u = 5;
  std::vector<double> a_values;
  double pf_fixed = 0.1;
  double snr_db_start = -10.0;
  double snr_db_stop = 30.0;
  double snr_db_step = 0.5;
  double snr_db_fixed = 10.0;
  std::vector<double> pf_grid;
  Engine engine = Engine::kAnalytic;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;

  void validate() const;  // throws std::domain_error with the offending field
};

// Fifty log-spaced points covering the default complementary-ROC axis.
std::vector<double> default_pf_grid();

struct RocPoint {
  double pf;
  double pd;
  double pm;  // always exactly 1 - pd
  double a;
  double snr_db;
  double lambda;
  double est_error;
  int u;
  std::string method;  // "series" | "quadrature" | "simulate"
};

// Points are emitted in (a, snr) respectively (a, pf) lexicographic
// order; evaluation may be concurrent but ordering is deterministic.
std::vector<RocPoint> run_pd_vs_snr(const SweepSpec& spec);
std::vector<RocPoint> run_comp_roc(const SweepSpec& spec);
std::vector<RocPoint> run(const SweepSpec& spec);

// Machine-readable renderings: 12 significant digits, '.' decimal
// separator, LF line endings. The CSV header is
// kind,u,a,snr_db,pf,lambda,pd,pm,method,est_error
std::string to_csv(Kind kind, const std::vector<RocPoint>& points);
std::string to_json(Kind kind, const std::vector<RocPoint>& points);

}  // namespace edfade::sweep

#endif  // EDFADE_SWEEP_HPP
