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

#ifndef EDFADE_UTIL_HPP
#define EDFADE_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

namespace edfade {

// Neumaier compensated accumulator. Keeps the running error of a long,
// possibly heavily cancelling sum at the level of one rounding of the
// final value instead of one per term.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Worker count: EDFADE_THREADS if set and positive, otherwise the
// hardware concurrency (at least 1).
unsigned default_thread_count();

// Runs fn(begin, end) over [0, n) split into contiguous chunks, one per
// worker. fn must be safe to run concurrently on disjoint ranges.
void parallel_chunks(std::uint64_t n,
                     const std::function<void(std::uint64_t, std::uint64_t,
                                              unsigned)>& fn);

// Shortest-of-12-significant-digits formatting used for all machine
// readable numeric output ("%.12g", C locale).
std::string format_sig12(double x);

// SplitMix64 finalizer; used to derive independent per-point seeds.
std::uint64_t mix64(std::uint64_t x);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace edfade

#endif  // EDFADE_UTIL_HPP
