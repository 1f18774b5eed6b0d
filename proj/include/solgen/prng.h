// Copyright 2026 The Solgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SOLGEN_PRNG_H_
#define SOLGEN_PRNG_H_

#include <array>
#include <cstdint>

namespace solgen {

// xoshiro256** seeded by expanding a 64-bit seed through splitmix64.
class Prng {
 public:
  explicit Prng(uint64_t seed);

  uint64_t Next();
  // Uniform in [0, n) by rejection; n must be >= 1.
  uint64_t NextBounded(uint64_t n);
  // Uniform in [lo, hi].
  uint64_t NextInRange(uint64_t lo, uint64_t hi);
  // Uniform in [0, 1) with 53 bits of precision.
  double NextDouble();
  bool Chance(double probability);

  const std::array<uint64_t, 4>& state() const { return s_; }

 private:
  std::array<uint64_t, 4> s_;
};

uint64_t SplitMix64(uint64_t& state);

}  // namespace solgen

#endif  // SOLGEN_PRNG_H_
