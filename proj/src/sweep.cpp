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

#include "sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "detector.hpp"
#include "montecarlo.hpp"
#include "util.hpp"

namespace edfade::sweep {

void SweepSpec::validate() const {
  if (u < 1) throw std::domain_error("sweep: u must be >= 1");
  if (a_values.empty()) throw std::domain_error("sweep: a_values is empty");
  for (double a : a_values)
    if (!(a > 0.0)) throw std::domain_error("sweep: a values must be > 0");
  if (kind == Kind::kPdVsSnr) {
    if (!(pf_fixed > 0.0) || !(pf_fixed < 1.0))
      throw std::domain_error("sweep: pf_fixed must lie in (0,1)");
    if (!(snr_db_step > 0.0))
      throw std::domain_error("sweep: snr_db_step must be > 0");
    if (snr_db_stop < snr_db_start)
      throw std::domain_error("sweep: snr_db range is empty");
  } else {
    if (pf_grid.empty()) throw std::domain_error("sweep: pf_grid is empty");
    for (double pf : pf_grid)
      if (!(pf > 0.0) || !(pf < 1.0))
        throw std::domain_error("sweep: pf grid values must lie in (0,1)");
  }
  if (engine == Engine::kSimulate && trials < 1)
    throw std::domain_error("sweep: trials must be >= 1");
}

std::vector<double> default_pf_grid() {
  std::vector<double> grid(50);
  double lo = std::log(1e-3), hi = std::log(0.999);
  for (int i = 0; i < 50; ++i)
    grid[i] = std::exp(lo + (hi - lo) * i / 49.0);
  return grid;
}

namespace {

std::vector<double> snr_grid(const SweepSpec& spec) {
  // Points computed as start + k*step, never by accumulation, so the
  // grid is identical however it is traversed.
  auto n = static_cast<std::size_t>(
      std::floor((spec.snr_db_stop - spec.snr_db_start) / spec.snr_db_step +
                 1e-9)) +
           1;
  std::vector<double> grid(n);
  for (std::size_t k = 0; k < n; ++k)
    grid[k] = spec.snr_db_start + static_cast<double>(k) * spec.snr_db_step;
  return grid;
}

RocPoint eval_point(const SweepSpec& spec, double a, double snr_db, double pf,
                    double lambda, std::uint64_t point_index) {
  detector::DetectorConfig cfg(spec.u, lambda);
  channel::WeibullChannel ch(a, db_to_linear(snr_db));
  RocPoint pt;
  pt.pf = pf;
  pt.a = a;
  pt.snr_db = snr_db;
  pt.lambda = lambda;
  pt.u = spec.u;
  if (spec.engine == Engine::kAnalytic) {
    detector::AvgPdResult r = detector::avg_pd(cfg, ch);
    pt.pd = r.value;
    pt.est_error = r.est_error;
    pt.method =
        r.method == detector::Method::kSeries ? "series" : "quadrature";
  } else {
    mc::SimSpec sim{cfg, ch, spec.trials, mix64(spec.seed + point_index),
                    mc::Hypothesis::kH1};
    mc::SimReport rep = mc::estimate_detection(sim);
    pt.pd = rep.estimate;
    pt.est_error = rep.half_width_95;
    pt.method = "simulate";
  }
  pt.pm = 1.0 - pt.pd;
  return pt;
}

}  // namespace

std::vector<RocPoint> run_pd_vs_snr(const SweepSpec& spec) {
  spec.validate();
  if (spec.kind != Kind::kPdVsSnr)
    throw std::domain_error("run_pd_vs_snr: wrong sweep kind");
  const double lambda = detector::threshold_for_pf(spec.u, spec.pf_fixed);
  const std::vector<double> snrs = snr_grid(spec);
  std::vector<RocPoint> points(spec.a_values.size() * snrs.size());
  for (std::size_t ia = 0; ia < spec.a_values.size(); ++ia) {
    for (std::size_t is = 0; is < snrs.size(); ++is) {
      std::uint64_t idx = ia * snrs.size() + is;
      points[idx] = eval_point(spec, spec.a_values[ia], snrs[is],
                               spec.pf_fixed, lambda, idx);
    }
  }
  return points;
}

std::vector<RocPoint> run_comp_roc(const SweepSpec& spec) {
  spec.validate();
  if (spec.kind != Kind::kCompRoc)
    throw std::domain_error("run_comp_roc: wrong sweep kind");
  std::vector<RocPoint> points(spec.a_values.size() * spec.pf_grid.size());
  for (std::size_t ia = 0; ia < spec.a_values.size(); ++ia) {
    for (std::size_t ip = 0; ip < spec.pf_grid.size(); ++ip) {
      double pf = spec.pf_grid[ip];
      double lambda = detector::threshold_for_pf(spec.u, pf);
      std::uint64_t idx = ia * spec.pf_grid.size() + ip;
      points[idx] = eval_point(spec, spec.a_values[ia], spec.snr_db_fixed, pf,
                               lambda, idx);
    }
  }
  return points;
}

std::vector<RocPoint> run(const SweepSpec& spec) {
  return spec.kind == Kind::kPdVsSnr ? run_pd_vs_snr(spec)
                                     : run_comp_roc(spec);
}

namespace {

const char* kind_name(Kind kind) {
  return kind == Kind::kPdVsSnr ? "pd_vs_snr" : "comp_roc";
}

}  // namespace

std::string to_csv(Kind kind, const std::vector<RocPoint>& points) {
  std::string out = "kind,u,a,snr_db,pf,lambda,pd,pm,method,est_error\n";
  for (const RocPoint& p : points) {
    out += kind_name(kind);
    out += ',';
    out += std::to_string(p.u);
    out += ',';
    out += format_sig12(p.a);
    out += ',';
    out += format_sig12(p.snr_db);
    out += ',';
    out += format_sig12(p.pf);
    out += ',';
    out += format_sig12(p.lambda);
    out += ',';
    out += format_sig12(p.pd);
    out += ',';
    out += format_sig12(p.pm);
    out += ',';
    out += p.method;
    out += ',';
    out += format_sig12(p.est_error);
    out += '\n';
  }
  return out;
}

std::string to_json(Kind kind, const std::vector<RocPoint>& points) {
  std::string out = "[";
  bool first = true;
  for (const RocPoint& p : points) {
    if (!first) out += ',';
    first = false;
    out += "\n  {\"kind\":\"";
    out += kind_name(kind);
    out += "\",\"u\":" + std::to_string(p.u);
    out += ",\"a\":" + format_sig12(p.a);
    out += ",\"snr_db\":" + format_sig12(p.snr_db);
    out += ",\"pf\":" + format_sig12(p.pf);
    out += ",\"lambda\":" + format_sig12(p.lambda);
    out += ",\"pd\":" + format_sig12(p.pd);
    out += ",\"pm\":" + format_sig12(p.pm);
    out += ",\"method\":\"" + p.method + "\"";
    out += ",\"est_error\":" + format_sig12(p.est_error);
    out += "}";
  }
  out += "\n]\n";
  return out;
}

}  // namespace edfade::sweep
