// Copyright 2026 The ddeg Authors
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

#include "ddeg/rng.hpp"

#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

namespace ddeg {
namespace {

TEST(RngTest, SameKeySameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(RngTest, SubstreamsAreDistinctAndStable) {
  const Rng root(7);
  std::set<std::uint64_t> firsts;
  for (std::uint64_t i = 0; i < 64; ++i) {
    Rng s = root.substream(i);
    firsts.insert(s.next());
    EXPECT_EQ(root.substream(i).key(), s.key());
  }
  EXPECT_EQ(firsts.size(), 64u);
}

TEST(RngTest, UniformInUnitInterval) {
  Rng r(1);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double x = r.uniform();
    ASSERT_GE(x, 0.0);
    ASSERT_LT(x, 1.0);
    sum += x;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}

TEST(RngTest, BelowRespectsBound) {
  Rng r(3);
  for (std::uint64_t bound : {1ULL, 2ULL, 7ULL, 1000ULL}) {
    for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(bound), bound);
  }
}

TEST(ScriptedSourceTest, CyclesThroughValues) {
  ScriptedSource s({0.0, 0.25, 1.0});
  EXPECT_EQ(s.uniform(), 0.0);
  EXPECT_EQ(s.uniform(), 0.25);
  EXPECT_EQ(s.uniform(), 1.0);
  EXPECT_EQ(s.uniform(), 0.0);
  EXPECT_EQ(s.consumed(), 4u);
}

TEST(ScriptedSourceTest, RejectsOutOfRange) {
  EXPECT_THROW(ScriptedSource({1.5}), std::invalid_argument);
  EXPECT_THROW(ScriptedSource({}), std::invalid_argument);
}

}  // namespace
}  // namespace ddeg
