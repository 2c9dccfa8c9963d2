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

// Command-line front end. Everything flows through the shared library's
// C interface; this translation unit contains no numerics of its own.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "edfade/edfade.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct DetectorDeleter {
  void operator()(edf_detector* d) const { edf_detector_free(d); }
};
struct ChannelDeleter {
  void operator()(edf_channel* c) const { edf_channel_free(c); }
};
struct SweepDeleter {
  void operator()(edf_sweep* s) const { edf_sweep_free(s); }
};
struct RowsDeleter {
  void operator()(edf_sweep_rows* r) const { edf_sweep_rows_free(r); }
};
using DetectorPtr = std::unique_ptr<edf_detector, DetectorDeleter>;
using ChannelPtr = std::unique_ptr<edf_channel, ChannelDeleter>;
using SweepPtr = std::unique_ptr<edf_sweep, SweepDeleter>;
using RowsPtr = std::unique_ptr<edf_sweep_rows, RowsDeleter>;

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "edfade: " << message << "\n";
  std::exit(code);
}

int status_exit_code(edf_status status) {
  switch (status) {
    case EDF_OK:
      return kExitOk;
    case EDF_ERR_DOMAIN:
    case EDF_ERR_INVALID:
      return kExitUsage;
    default:
      return kExitNumerical;
  }
}

void check(edf_status status, const std::string& what) {
  if (status != EDF_OK)
    die(status_exit_code(status),
        what + ": " + edf_status_message(status));
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// One flat record, printed as a CSV header+row pair or a JSON object.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;
  void add(const std::string& key, double v) { fields.emplace_back(key, fmt(v)); }
  void add(const std::string& key, std::uint64_t v) {
    fields.emplace_back(key, std::to_string(v));
  }
  void add_text(const std::string& key, const std::string& v) {
    fields.emplace_back(key, v);
  }
  std::string csv() const {
    std::string head, row;
    for (const auto& [k, v] : fields) {
      if (!head.empty()) {
        head += ',';
        row += ',';
      }
      head += k;
      row += v;
    }
    return head + "\n" + row + "\n";
  }
  std::string json() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : fields) {
      if (!first) out += ',';
      first = false;
      bool quoted = v.empty() || (!std::isdigit(static_cast<unsigned char>(v[0])) &&
                                  v[0] != '-' && v[0] != '+');
      out += "\"" + k + "\":";
      out += quoted ? "\"" + v + "\"" : v;
    }
    return out + "}\n";
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out.good()) die(kExitUsage, "cannot open output file: " + out_path);
  out << text;
}

// ---------------------------------------------------------------------------
// shared option bundles

struct OutputOpts {
  std::string format = "csv";
  std::string path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& opts) {
  cmd->add_option("--output", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.path, "Write to a file instead of stdout");
}

DetectorPtr make_detector(int u, std::optional<double> pf,
                          std::optional<double> lambda) {
  if (pf.has_value() == lambda.has_value())
    die(kExitUsage, "exactly one of --pf or --lambda is required");
  DetectorPtr det;
  if (pf) {
    det.reset(edf_detector_create_for_pf(u, *pf));
    if (!det) die(kExitUsage, "invalid --u/--pf combination");
  } else {
    det.reset(edf_detector_create(u, *lambda));
    if (!det) die(kExitUsage, "invalid --u/--lambda combination");
  }
  return det;
}

// ---------------------------------------------------------------------------
// pd

void run_pd(int u, double a, double snr_db, std::optional<double> pf,
            std::optional<double> lambda, const std::string& method,
            double rel_tol, int max_terms, const OutputOpts& out) {
  DetectorPtr det = make_detector(u, pf, lambda);
  ChannelPtr ch(edf_channel_create(a, db_to_linear(snr_db)));
  if (!ch) die(kExitUsage, "invalid --a/--snr-db combination");

  edf_method want = EDF_METHOD_AUTO;
  if (method == "series") want = EDF_METHOD_SERIES;
  if (method == "quadrature") want = EDF_METHOD_QUADRATURE;

  double pd = 0.0, est_error = 0.0, lam = 0.0, pf_actual = 0.0;
  int terms = 0;
  edf_method used = EDF_METHOD_AUTO;
  check(edf_avg_pd(det.get(), ch.get(), want, rel_tol, max_terms, &pd, &terms,
                   &used, &est_error),
        "avg_pd");
  check(edf_detector_lambda(det.get(), &lam), "lambda");
  check(edf_prob_false_alarm(det.get(), &pf_actual), "prob_false_alarm");

  Record rec;
  rec.add("pf", pf_actual);
  rec.add("lambda", lam);
  rec.add("pd", pd);
  rec.add("pm", 1.0 - pd);
  rec.add_text("method", used == EDF_METHOD_SERIES ? "series" : "quadrature");
  rec.add("terms_used", static_cast<std::uint64_t>(terms));
  rec.add("est_error", est_error);
  emit(out.format == "json" ? rec.json() : rec.csv(), out.path);
}

// ---------------------------------------------------------------------------
// threshold

void run_threshold(int u, double pf, const OutputOpts& out) {
  double lambda = 0.0;
  check(edf_threshold_for_pf(u, pf, &lambda), "threshold_for_pf");
  DetectorPtr det(edf_detector_create(u, lambda));
  if (!det) die(kExitNumerical, "internal: threshold construction failed");
  double round_trip = 0.0;
  check(edf_prob_false_alarm(det.get(), &round_trip), "prob_false_alarm");
  Record rec;
  rec.add("lambda", lambda);
  rec.add("pf", round_trip);
  emit(out.format == "json" ? rec.json() : rec.csv(), out.path);
}

// ---------------------------------------------------------------------------
// simulate

void run_simulate(int u, std::optional<double> pf, std::optional<double> lambda,
                  std::uint64_t trials, std::uint64_t seed,
                  std::optional<double> a, std::optional<double> snr_db,
                  const OutputOpts& out) {
  if (a.has_value() != snr_db.has_value())
    die(kExitUsage, "--a and --snr-db must be given together");
  DetectorPtr det = make_detector(u, pf, lambda);
  ChannelPtr ch;
  if (a) {
    ch.reset(edf_channel_create(*a, db_to_linear(*snr_db)));
    if (!ch) die(kExitUsage, "invalid --a/--snr-db combination");
  }
  double estimate = 0.0, half_width = 0.0;
  check(edf_simulate(det.get(), ch.get(), ch ? EDF_H1 : EDF_H0, trials, seed,
                     &estimate, &half_width),
        "simulate");
  Record rec;
  rec.add_text("hypothesis", ch ? "h1" : "h0");
  rec.add("estimate", estimate);
  rec.add("trials", trials);
  rec.add("seed", seed);
  rec.add("half_width_95", half_width);
  emit(out.format == "json" ? rec.json() : rec.csv(), out.path);
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string kind = "pd_vs_snr";
  int u = 5;
  std::vector<double> a_values = {0.75, 1.0, 1.5, 2.0};
  double pf = 0.1;
  double snr_start = -10.0, snr_stop = 30.0, snr_step = 0.5;
  double snr_db_fixed = 10.0;
  std::vector<double> pf_grid;  // empty: 50 log-spaced points
  std::string engine = "analytic";
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;
};

RowsPtr run_one_sweep(const SweepArgs& args) {
  edf_sweep_kind kind = args.kind == "comp_roc" ? EDF_SWEEP_COMP_ROC
                                                : EDF_SWEEP_PD_VS_SNR;
  SweepPtr sweep(edf_sweep_create(kind, args.u));
  if (!sweep) die(kExitUsage, "invalid sweep parameters");
  check(edf_sweep_set_a_values(sweep.get(), args.a_values.data(),
                               args.a_values.size()),
        "a values");
  if (kind == EDF_SWEEP_PD_VS_SNR) {
    check(edf_sweep_set_pf_fixed(sweep.get(), args.pf), "pf");
    check(edf_sweep_set_snr_db_range(sweep.get(), args.snr_start,
                                     args.snr_stop, args.snr_step),
          "snr range");
  } else {
    check(edf_sweep_set_snr_db_fixed(sweep.get(), args.snr_db_fixed),
          "snr fixed");
    if (!args.pf_grid.empty())
      check(edf_sweep_set_pf_grid(sweep.get(), args.pf_grid.data(),
                                  args.pf_grid.size()),
            "pf grid");
  }
  check(edf_sweep_set_engine(sweep.get(),
                             args.engine == "simulate" ? EDF_ENGINE_SIMULATE
                                                       : EDF_ENGINE_ANALYTIC,
                             args.trials, args.seed),
        "engine");
  edf_sweep_rows* rows = nullptr;
  check(edf_sweep_run(sweep.get(), &rows), "sweep run");
  return RowsPtr(rows);
}

// Flat key-value config: one [sweep] section per run.
struct ConfigError {
  int line;
  std::string message;
};

std::vector<SweepArgs> parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) die(kExitUsage, "cannot open config file: " + path);

  auto fail = [&](int line, const std::string& msg) {
    die(kExitUsage, path + ":" + std::to_string(line) + ": " + msg);
  };
  auto parse_double = [&](const std::string& v, int line) {
    try {
      std::size_t pos = 0;
      double d = std::stod(v, &pos);
      if (pos != v.size()) throw std::invalid_argument(v);
      return d;
    } catch (...) {
      fail(line, "not a number: '" + v + "'");
    }
    return 0.0;
  };
  auto parse_list = [&](const std::string& v, int line) {
    std::vector<double> vals;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
      vals.push_back(parse_double(item, line));
    if (vals.empty()) fail(line, "empty list");
    return vals;
  };

  std::vector<SweepArgs> sweeps;
  bool open = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find_first_of("#;"));
    auto b = line.find_first_not_of(" \t\r");
    auto e = line.find_last_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b, e - b + 1);
    if (line == "[sweep]") {
      sweeps.emplace_back();
      open = true;
      continue;
    }
    if (line.front() == '[') fail(line_no, "unknown section " + line);
    if (!open) fail(line_no, "key outside of a [sweep] section");
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    auto trim = [](std::string s) {
      auto b2 = s.find_first_not_of(" \t");
      auto e2 = s.find_last_not_of(" \t");
      return b2 == std::string::npos ? std::string()
                                     : s.substr(b2, e2 - b2 + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    SweepArgs& sw = sweeps.back();
    if (key == "kind") {
      if (value != "pd_vs_snr" && value != "comp_roc")
        fail(line_no, "kind must be pd_vs_snr or comp_roc");
      sw.kind = value;
    } else if (key == "u") {
      sw.u = static_cast<int>(parse_double(value, line_no));
    } else if (key == "a") {
      sw.a_values = parse_list(value, line_no);
    } else if (key == "pf") {
      sw.pf = parse_double(value, line_no);
    } else if (key == "snr_db") {
      // range start:stop:step for pd_vs_snr, single value for comp_roc
      if (value.find(':') != std::string::npos) {
        std::stringstream ss(value);
        std::string part;
        std::vector<double> parts;
        while (std::getline(ss, part, ':'))
          parts.push_back(parse_double(part, line_no));
        if (parts.size() != 3) fail(line_no, "snr_db range needs start:stop:step");
        sw.snr_start = parts[0];
        sw.snr_stop = parts[1];
        sw.snr_step = parts[2];
      } else {
        sw.snr_db_fixed = parse_double(value, line_no);
      }
    } else if (key == "pf_grid") {
      if (value.rfind("log:", 0) == 0) {
        std::stringstream ss(value.substr(4));
        std::string part;
        std::vector<double> parts;
        while (std::getline(ss, part, ':'))
          parts.push_back(parse_double(part, line_no));
        if (parts.size() != 3 || parts[2] < 2)
          fail(line_no, "pf_grid log form needs log:min:max:count");
        std::size_t n = static_cast<std::size_t>(parts[2]);
        sw.pf_grid.resize(n);
        double lo = std::log(parts[0]), hi = std::log(parts[1]);
        for (std::size_t i = 0; i < n; ++i)
          sw.pf_grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) /
                                            static_cast<double>(n - 1));
      } else {
        sw.pf_grid = parse_list(value, line_no);
      }
    } else if (key == "engine") {
      if (value != "analytic" && value != "simulate")
        fail(line_no, "engine must be analytic or simulate");
      sw.engine = value;
    } else if (key == "trials") {
      sw.trials = static_cast<std::uint64_t>(parse_double(value, line_no));
    } else if (key == "seed") {
      sw.seed = static_cast<std::uint64_t>(parse_double(value, line_no));
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  if (sweeps.empty()) die(kExitUsage, path + ": no [sweep] section found");
  return sweeps;
}

void run_sweeps(const std::vector<SweepArgs>& sweeps, const OutputOpts& out) {
  std::string text;
  for (std::size_t i = 0; i < sweeps.size(); ++i) {
    RowsPtr rows = run_one_sweep(sweeps[i]);
    if (out.format == "json") {
      std::string part = edf_sweep_rows_json(rows.get());
      // merge the arrays of consecutive sweeps
      if (i == 0) {
        text = part;
      } else {
        text.erase(text.find_last_of(']'));
        while (!text.empty() && (text.back() == '\n')) text.pop_back();
        part.erase(0, part.find_first_of('[') + 1);
        text += "," + part;
      }
    } else {
      std::string part = edf_sweep_rows_csv(rows.get());
      if (i > 0) part.erase(0, part.find('\n') + 1);  // keep one header
      text += part;
    }
  }
  emit(text, out.path);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyCell {
  double worst_series_quad = 0.0;
  int series_ok = 0;
  int series_skipped = 0;
};

int run_verify(bool quick) {
  const std::vector<double> a_grid =
      quick ? std::vector<double>{1.0, 2.5}
            : std::vector<double>{0.75, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 5.0};
  const std::vector<int> u_grid = quick ? std::vector<int>{1, 5}
                                        : std::vector<int>{1, 2, 5, 10};
  const std::vector<double> pf_grid =
      quick ? std::vector<double>{0.1}
            : std::vector<double>{0.01, 0.1, 0.2, 0.5};
  const std::vector<double> db_grid =
      quick ? std::vector<double>{0.0, 10.0, 25.0}
            : std::vector<double>{0.0, 5.0, 10.0, 15.0, 20.0, 25.0};

  bool ok = true;
  std::printf("series/quadrature agreement (tolerance 1e-8):\n");
  std::printf("%8s %4s %12s %8s %8s\n", "a", "u", "worst_delta", "ok", "skip");
  for (double a : a_grid) {
    for (int u : u_grid) {
      VerifyCell cell;
      for (double pf : pf_grid) {
        DetectorPtr det(edf_detector_create_for_pf(u, pf));
        if (!det) die(kExitNumerical, "detector construction failed");
        for (double db : db_grid) {
          ChannelPtr ch(edf_channel_create(a, db_to_linear(db)));
          double series = 0.0, quad = 0.0;
          edf_status st = edf_avg_pd(det.get(), ch.get(), EDF_METHOD_SERIES,
                                     0.0, 0, &series, nullptr, nullptr,
                                     nullptr);
          if (st != EDF_OK) {
            ++cell.series_skipped;
            continue;
          }
          check(edf_avg_pd(det.get(), ch.get(), EDF_METHOD_QUADRATURE, 0.0, 0,
                           &quad, nullptr, nullptr, nullptr),
                "quadrature");
          ++cell.series_ok;
          cell.worst_series_quad =
              std::max(cell.worst_series_quad, std::abs(series - quad));
        }
      }
      if (cell.worst_series_quad > 1e-8) ok = false;
      std::printf("%8.2f %4d %12.3e %8d %8d\n", a, u, cell.worst_series_quad,
                  cell.series_ok, cell.series_skipped);
    }
  }

  std::printf("\nquadrature/Monte-Carlo agreement:\n");
  struct McCell {
    double a;
    int u;
    double pf, db;
  };
  const std::vector<McCell> mc_cells =
      quick ? std::vector<McCell>{{1.0, 5, 0.1, 10.0}, {2.5, 2, 0.1, 5.0}}
            : std::vector<McCell>{{0.75, 1, 0.1, 0.0},  {0.75, 10, 0.01, 25.0},
                                  {1.0, 5, 0.2, 10.0},  {1.0, 2, 0.5, 5.0},
                                  {1.5, 5, 0.1, 15.0},  {2.0, 5, 0.1, 5.0},
                                  {2.0, 10, 0.01, 20.0}, {2.5, 1, 0.2, 10.0},
                                  {3.0, 5, 0.1, 10.0},  {3.5, 2, 0.1, 0.0},
                                  {5.0, 5, 0.01, 15.0}, {5.0, 10, 0.5, 25.0}};
  const std::uint64_t trials = quick ? 100000 : 1000000;
  for (const McCell& cell : mc_cells) {
    DetectorPtr det(edf_detector_create_for_pf(cell.u, cell.pf));
    ChannelPtr ch(edf_channel_create(cell.a, db_to_linear(cell.db)));
    double quad = 0.0, est = 0.0, hw = 0.0;
    check(edf_avg_pd(det.get(), ch.get(), EDF_METHOD_QUADRATURE, 0.0, 0, &quad,
                     nullptr, nullptr, nullptr),
          "quadrature");
    check(edf_simulate(det.get(), ch.get(), EDF_H1, trials, 20260810, &est,
                       &hw),
          "simulate");
    double tol = std::max(3.0 * hw, 5e-3);
    bool pass = std::abs(est - quad) <= tol;
    if (!pass) ok = false;
    std::printf(
        "  a=%-4.2f u=%-2d pf=%-4.2f %5.1f dB: |mc-quad|=%.2e tol=%.2e %s\n",
        cell.a, cell.u, cell.pf, cell.db, std::abs(est - quad), tol,
        pass ? "PASS" : "FAIL");
  }

  std::printf("\nreference missed-detection operating points "
              "(u=5, a=1, pf=0.2; informational):\n");
  struct Anchor {
    double db, pm;
  };
  for (const Anchor& anchor :
       {Anchor{-5.0, 0.78}, Anchor{10.0, 0.41}, Anchor{25.0, 0.10}}) {
    DetectorPtr det(edf_detector_create_for_pf(5, 0.2));
    ChannelPtr ch(edf_channel_create(1.0, db_to_linear(anchor.db)));
    double pd = 0.0;
    check(edf_avg_pd(det.get(), ch.get(), EDF_METHOD_AUTO, 0.0, 0, &pd,
                     nullptr, nullptr, nullptr),
          "avg_pd");
    double pm = 1.0 - pd;
    std::printf("  %5.1f dB: pm=%.4f vs %.2f (|delta| %.4f) %s\n", anchor.db,
                pm, anchor.pm, std::abs(pm - anchor.pm),
                std::abs(pm - anchor.pm) <= 0.02 ? "PASS" : "FAIL");
  }

  std::printf("\noracle invariants: %s\n", ok ? "PASS" : "FAIL");
  return ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"energy-detector performance metrics over Weibull fading"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(edf_version()));

  // pd
  auto* pd_cmd = app.add_subcommand(
      "pd", "Average detection probability at one operating point");
  int pd_u = 5;
  double pd_a = 1.0, pd_snr = 10.0, pd_rel_tol = 0.0;
  int pd_max_terms = 0;
  std::optional<double> pd_pf, pd_lambda;
  std::string pd_method = "auto";
  OutputOpts pd_out;
  pd_cmd->add_option("--u", pd_u, "Time-bandwidth product")->required();
  pd_cmd->add_option("--a", pd_a, "Weibull fading severity")->required();
  pd_cmd->add_option("--snr-db", pd_snr, "Average SNR in dB")->required();
  pd_cmd->add_option("--pf", pd_pf, "False-alarm target (solves lambda)");
  pd_cmd->add_option("--lambda", pd_lambda, "Decision threshold");
  pd_cmd->add_option("--method", pd_method, "Evaluation method")
      ->check(CLI::IsMember({"auto", "series", "quadrature"}));
  pd_cmd->add_option("--rel-tol", pd_rel_tol, "Series relative tolerance");
  pd_cmd->add_option("--max-terms", pd_max_terms, "Series term cap");
  add_output_opts(pd_cmd, pd_out);

  // threshold
  auto* th_cmd =
      app.add_subcommand("threshold", "Solve the decision threshold for a "
                                      "false-alarm target");
  int th_u = 5;
  double th_pf = 0.1;
  OutputOpts th_out;
  th_cmd->add_option("--u", th_u, "Time-bandwidth product")->required();
  th_cmd->add_option("--pf", th_pf, "False-alarm target")->required();
  add_output_opts(th_cmd, th_out);

  // simulate
  auto* sim_cmd =
      app.add_subcommand("simulate", "Monte Carlo estimate of the false-alarm "
                                     "or detection probability");
  int sim_u = 5;
  std::optional<double> sim_pf, sim_lambda, sim_a, sim_snr;
  std::uint64_t sim_trials = 1000000, sim_seed = 1;
  OutputOpts sim_out;
  sim_cmd->add_option("--u", sim_u, "Time-bandwidth product")->required();
  sim_cmd->add_option("--pf", sim_pf, "False-alarm target (solves lambda)");
  sim_cmd->add_option("--lambda", sim_lambda, "Decision threshold");
  sim_cmd->add_option("--trials", sim_trials, "Number of trials");
  sim_cmd->add_option("--seed", sim_seed, "Random seed");
  sim_cmd->add_option("--a", sim_a, "Weibull severity (enables fading H1)");
  sim_cmd->add_option("--snr-db", sim_snr, "Average SNR in dB");
  add_output_opts(sim_cmd, sim_out);

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Generate curve grids (CSV or JSON)");
  SweepArgs sweep_args;
  std::string sweep_config;
  std::vector<double> sweep_log_grid;
  OutputOpts sweep_out;
  sweep_cmd->add_option("--config", sweep_config,
                        "Config file with [sweep] sections");
  sweep_cmd->add_option("--kind", sweep_args.kind, "Sweep kind")
      ->check(CLI::IsMember({"pd_vs_snr", "comp_roc"}));
  sweep_cmd->add_option("--u", sweep_args.u, "Time-bandwidth product");
  sweep_cmd->add_option("--a", sweep_args.a_values, "Fading severities");
  sweep_cmd->add_option("--pf", sweep_args.pf, "Fixed false-alarm target");
  sweep_cmd->add_option("--snr-start", sweep_args.snr_start, "Grid start, dB");
  sweep_cmd->add_option("--snr-stop", sweep_args.snr_stop, "Grid stop, dB");
  sweep_cmd->add_option("--snr-step", sweep_args.snr_step, "Grid step, dB");
  sweep_cmd->add_option("--snr-db", sweep_args.snr_db_fixed,
                        "Fixed SNR for comp_roc, dB");
  sweep_cmd->add_option("--pf-grid", sweep_args.pf_grid,
                        "Explicit false-alarm grid for comp_roc");
  sweep_cmd->add_option("--pf-grid-log", sweep_log_grid,
                        "Log-spaced grid: min max count")
      ->expected(3);
  sweep_cmd->add_option("--engine", sweep_args.engine, "Evaluation engine")
      ->check(CLI::IsMember({"analytic", "simulate"}));
  sweep_cmd->add_option("--trials", sweep_args.trials,
                        "Trials per point (engine=simulate)");
  sweep_cmd->add_option("--seed", sweep_args.seed,
                        "Base seed (engine=simulate)");
  add_output_opts(sweep_cmd, sweep_out);

  // verify
  auto* verify_cmd = app.add_subcommand(
      "verify", "Cross-check the series, quadrature and Monte Carlo routes");
  bool verify_quick = false;
  verify_cmd->add_flag("--quick", verify_quick, "Reduced grid for CI");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    std::cout << edf_version() << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "edfade: " << e.what() << "\n";
    return kExitUsage;
  }

  if (pd_cmd->parsed()) {
    run_pd(pd_u, pd_a, pd_snr, pd_pf, pd_lambda, pd_method, pd_rel_tol,
           pd_max_terms, pd_out);
  } else if (th_cmd->parsed()) {
    run_threshold(th_u, th_pf, th_out);
  } else if (sim_cmd->parsed()) {
    run_simulate(sim_u, sim_pf, sim_lambda, sim_trials, sim_seed, sim_a,
                 sim_snr, sim_out);
  } else if (sweep_cmd->parsed()) {
    if (!sweep_log_grid.empty()) {
      std::size_t n = static_cast<std::size_t>(sweep_log_grid[2]);
      if (n < 2 || !(sweep_log_grid[0] > 0.0) || !(sweep_log_grid[1] < 1.0))
        die(kExitUsage, "--pf-grid-log needs min max count with count >= 2");
      sweep_args.pf_grid.resize(n);
      double lo = std::log(sweep_log_grid[0]), hi = std::log(sweep_log_grid[1]);
      for (std::size_t i = 0; i < n; ++i)
        sweep_args.pf_grid[i] =
            std::exp(lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(n - 1));
    }
    if (!sweep_config.empty()) {
      run_sweeps(parse_config(sweep_config), sweep_out);
    } else {
      run_sweeps({sweep_args}, sweep_out);
    }
  } else if (verify_cmd->parsed()) {
    return run_verify(verify_quick);
  }
  return kExitOk;
}
