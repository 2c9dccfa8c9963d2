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

#include "rng.hpp"

#include <cmath>
#include <numbers>

namespace edfade {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t c[4], std::uint32_t k0,
                         std::uint32_t k1) {
  std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * c[0];
  std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * c[2];
  std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  c[0] = hi1 ^ c[1] ^ k0;
  c[1] = lo1;
  c[2] = hi0 ^ c[3] ^ k1;
  c[3] = lo0;
}

}  // namespace

void CounterRng::refill() {
  std::uint32_t c[4] = {
      static_cast<std::uint32_t>(block_),
      static_cast<std::uint32_t>(block_ >> 32),
      static_cast<std::uint32_t>(stream_),
      static_cast<std::uint32_t>(stream_ >> 32),
  };
  std::uint32_t k0 = key0_, k1 = key1_;
  for (int round = 0; round < 10; ++round) {
    philox_round(c, k0, k1);
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  buf_[0] = (static_cast<std::uint64_t>(c[1]) << 32) | c[0];
  buf_[1] = (static_cast<std::uint64_t>(c[3]) << 32) | c[2];
  buffered_ = 2;
  ++block_;
}

double CounterRng::next_uniform() {
  if (buffered_ == 0) refill();
  std::uint64_t v = buf_[--buffered_];
  // (k + 1/2) / 2^52 with k in [0, 2^52): strictly inside (0,1).
  return (static_cast<double>(v >> 12) + 0.5) * 0x1p-52;
}

double CounterRng::next_normal() {
  if (has_normal_) {
    has_normal_ = false;
    return normal_cache_;
  }
  double u1 = next_uniform();
  double u2 = next_uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * std::numbers::pi * u2;
  normal_cache_ = r * std::sin(theta);
  has_normal_ = true;
  return r * std::cos(theta);
}

}  // namespace edfade
