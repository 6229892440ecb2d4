// Copyright 2026 The diskbath Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "diskbath/random.hpp"

namespace diskbath {
namespace {

using Block = std::array<std::uint32_t, 4>;

// Known-answer vectors published with the Random123 distribution.
TEST(Philox, KnownAnswers) {
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
            (Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(RandomStream, ReplaysExactly) {
  RandomStream a(42, 3), b(42, 3);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a(), b());
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.normal(), b.normal());
}

TEST(RandomStream, SeedsAndStreamsDiffer) {
  RandomStream a(42, 0), b(43, 0), c(42, 1);
  const auto x = a();
  EXPECT_NE(x, b());
  EXPECT_NE(x, c());
}

TEST(RandomStream, SubstreamsAreDistinctAndStable) {
  const RandomStream base(7);
  std::set<std::uint64_t> ids;
  for (std::uint64_t j = 0; j < 10000; ++j) ids.insert(base.substream(j).stream_id());
  EXPECT_EQ(ids.size(), 10000u);
  EXPECT_EQ(base.substream(5).stream_id(), RandomStream(7).substream(5).stream_id());
  EXPECT_EQ(base.substream(5).seed(), 7u);
}

TEST(RandomStream, UniformIsOpenAndCentred) {
  RandomStream rng(1);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // Standard error of the mean is sqrt(1/12/n) ~ 6.5e-4.
  EXPECT_NEAR(sum / n, 0.5, 4e-3);
}

TEST(RandomStream, NormalMoments) {
  RandomStream rng(2);
  double s1 = 0.0, s2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    s1 += z;
    s2 += z * z;
  }
  EXPECT_NEAR(s1 / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.015);
}

TEST(Splitmix, ReferenceValue) {
  // First output of the reference splitmix64 generator seeded with 0.
  EXPECT_EQ(splitmix64(0), 0xe220a8397b1dcdafULL);
}

}  // namespace
}  // namespace diskbath
