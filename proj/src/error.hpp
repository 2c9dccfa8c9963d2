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

#ifndef EDFADE_ERROR_HPP
#define EDFADE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace edfade {

// Thrown when an iterative scheme (series, continued fraction,
// quadrature) exhausts its budget or detects that it cannot reach the
// requested tolerance (divergence, catastrophic cancellation).
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a result violates an internal accuracy contract, e.g. a
// probability straying outside [0,1] by more than the allowed excursion.
class AccuracyError : public std::runtime_error {
 public:
  explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edfade

#endif  // EDFADE_ERROR_HPP
