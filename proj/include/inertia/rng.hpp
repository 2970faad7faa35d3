// Copyright 2026 inertia-eval contributors
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

#ifndef INERTIA_RNG_HPP_
#define INERTIA_RNG_HPP_

#include <cstdint>
#include <cstddef>

namespace inertia {

// splitmix64. Fixed project-wide so seeded outputs are portable across
// platforms and implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // output / 2^64 at double precision; always in [0, 1).
  double next_real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform index in [0, n). Modulo reduction; the bias of ~n/2^64 is
  // irrelevant at the index ranges used here.
  std::size_t next_index(std::size_t n) {
    return static_cast<std::size_t>(next() % n);
  }

  // One mixing step applied to x: the first output of a generator seeded
  // with x. Used to derive independent substreams.
  static std::uint64_t mix(std::uint64_t x) { return SplitMix64(x).next(); }

 private:
  std::uint64_t state_;
};

}  // namespace inertia

#endif  // INERTIA_RNG_HPP_
