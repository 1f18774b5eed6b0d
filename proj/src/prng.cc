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

#include "solgen/prng.h"

#include <stdexcept>

namespace solgen {
namespace {

constexpr uint64_t Rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

uint64_t SplitMix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Prng::Prng(uint64_t seed) {
  for (uint64_t& word : s_) word = SplitMix64(seed);
}

uint64_t Prng::Next() {
  const uint64_t result = Rotl(s_[1] * 5, 7) * 9;
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = Rotl(s_[3], 45);
  return result;
}

uint64_t Prng::NextBounded(uint64_t n) {
  if (n == 0) throw std::invalid_argument("NextBounded: n must be >= 1");
  const uint64_t threshold = (0 - n) % n;
  for (;;) {
    uint64_t x = Next();
    if (x >= threshold) return x % n;
  }
}

uint64_t Prng::NextInRange(uint64_t lo, uint64_t hi) {
  if (hi < lo) throw std::invalid_argument("NextInRange: empty range");
  if (lo == 0 && hi == UINT64_MAX) return Next();
  return lo + NextBounded(hi - lo + 1);
}

double Prng::NextDouble() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

bool Prng::Chance(double probability) {
  if (probability <= 0) return false;
  if (probability >= 1) return true;
  return NextDouble() < probability;
}

}  // namespace solgen
