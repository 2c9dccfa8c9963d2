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

#ifndef EDFADE_RNG_HPP
#define EDFADE_RNG_HPP

#include <cstdint>

namespace edfade {

// Philox4x32-10 counter-based stream (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3"). A draw depends only on
// (seed, stream, position), so streams can be handed to concurrent
// workers without coordination and a partitioned run reproduces a
// serial one bit for bit. The (seed, stream) pair is the identity of
// the stream; the per-trial substreams of the simulator use the trial
// index as the stream value.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key0_(static_cast<std::uint32_t>(seed)),
        key1_(static_cast<std::uint32_t>(seed >> 32)),
        stream_(stream) {}

  // Uniform on the open interval (0,1); 52-bit resolution, never 0 or 1.
  double next_uniform();

  // Standard normal via the Box-Muller transform (pairs are generated
  // together; the second draw of a pair is buffered).
  double next_normal();

 private:
  void refill();

  std::uint32_t key0_, key1_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::uint64_t buf_[2] = {0, 0};
  int buffered_ = 0;
  double normal_cache_ = 0.0;
  bool has_normal_ = false;
};

}  // namespace edfade

#endif  // EDFADE_RNG_HPP
