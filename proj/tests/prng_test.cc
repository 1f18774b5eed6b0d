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

#include <array>
#include <cstdint>

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

namespace solgen {
namespace {

// Reference values from tests/oracles/prng_oracle.py.
TEST(SplitMix64Test, MatchesReferenceVector) {
  uint64_t state = 1234567;
  EXPECT_EQ(SplitMix64(state), 6457827717110365317ULL);
  EXPECT_EQ(SplitMix64(state), 3203168211198807973ULL);
  EXPECT_EQ(SplitMix64(state), 9817491932198370423ULL);
}

TEST(PrngTest, SeedExpandsThroughSplitMix) {
  Prng prng(42);
  std::array<uint64_t, 4> expected = {13679457532755275413ULL, 2949826092126892291ULL,
                                      5139283748462763858ULL, 6349198060258255764ULL};
  EXPECT_EQ(prng.state(), expected);
}

TEST(PrngTest, MatchesOracleStream) {
  Prng zero(0);
  EXPECT_EQ(zero.Next(), 11091344671253066420ULL);
  EXPECT_EQ(zero.Next(), 13793997310169335082ULL);
  EXPECT_EQ(zero.Next(), 1900383378846508768ULL);
  Prng p42(42);
  EXPECT_EQ(p42.Next(), 1546998764402558742ULL);
  EXPECT_EQ(p42.Next(), 6990951692964543102ULL);
  EXPECT_EQ(p42.Next(), 12544586762248559009ULL);
}

TEST(PrngTest, BoundedGoldenTriple) {
  Prng prng(42);
  EXPECT_EQ(prng.NextBounded(100), 42u);
  EXPECT_EQ(prng.NextBounded(100), 2u);
  EXPECT_EQ(prng.NextBounded(100), 9u);
}

TEST(PrngTest, DoubleMatchesOracle) {
  Prng prng(7);
  EXPECT_DOUBLE_EQ(prng.NextDouble(), 0.7005764821796896);
  EXPECT_DOUBLE_EQ(prng.NextDouble(), 0.2787512294737843);
  EXPECT_DOUBLE_EQ(prng.NextDouble(), 0.8396274618764198);
}

TEST(PrngTest, BoundOneIsAlwaysZero) {
  Prng prng(3);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(prng.NextBounded(1), 0u);
}

TEST(PrngTest, BoundZeroThrows) {
  Prng prng(3);
  EXPECT_THROW(prng.NextBounded(0), std::invalid_argument);
}

TEST(PrngTest, SameSeedSameStream) {
  Prng a(99), b(99);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.Next(), b.Next());
}

TEST(PrngTest, RangeIsInclusive) {
  Prng prng(5);
  bool saw_lo = false, saw_hi = false;
  for (int i = 0; i < 1000; ++i) {
    uint64_t v = prng.NextInRange(3, 6);
    ASSERT_GE(v, 3u);
    ASSERT_LE(v, 6u);
    saw_lo |= v == 3;
    saw_hi |= v == 6;
  }
  EXPECT_TRUE(saw_lo && saw_hi);
}

TEST(PrngTest, ChanceAtBoundsConsumesNoDraw) {
  Prng a(8), b(8);
  EXPECT_FALSE(a.Chance(0.0));
  EXPECT_TRUE(a.Chance(1.0));
  EXPECT_EQ(a.Next(), b.Next());
}

TEST(PrngTest, BoundedIsUniformChiSquare) {
  constexpr int kBins = 16;
  constexpr int kDraws = 1000000;
  Prng prng(2024);
  std::array<int64_t, kBins> counts{};
  for (int i = 0; i < kDraws; ++i) ++counts[prng.NextBounded(kBins)];
  double expected = static_cast<double>(kDraws) / kBins;
  double stat = 0;
  for (int64_t c : counts) stat += (c - expected) * (c - expected) / expected;
  boost::math::chi_squared dist(kBins - 1);
  double p_value = boost::math::cdf(boost::math::complement(dist, stat));
  EXPECT_GT(p_value, 0.001) << "chi-square " << stat;
}

}  // namespace
}  // namespace solgen
