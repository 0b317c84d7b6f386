// Copyright 2026 The cover Authors
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

#include <gtest/gtest.h>

#include <vector>

#include "cover/generators.hpp"
#include "cover/instance.hpp"
#include "cover/io.hpp"
#include "test_util.hpp"

namespace cover {
namespace {

using testutil::ExpectCode;

Instance Make(std::size_t m, std::vector<std::vector<Element>> sets) {
  Instance inst;
  inst.m = m;
  for (auto& s : sets) inst.sets.push_back({std::move(s), Rational(1)});
  return inst;
}

TEST(Validate, AcceptsSingleCoveringSet) {
  EXPECT_NO_THROW(Validate(Make(3, {{1, 2, 3}})));
}

TEST(Validate, ReportsUncoveredElement) {
  ExpectCode(ErrorCode::kUnionNotUniverse, [] { Validate(Make(3, {{1, 2}})); });
}

TEST(Validate, ReportsElementOutOfRangeWithSetIndex) {
  try {
    Validate(Make(3, {{1, 2, 3}, {1, 4}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kElementOutOfRange);
    EXPECT_EQ(e.set_index(), std::optional<std::size_t>(1));
  }
}

TEST(Validate, EmptySetAndNegativeWeight) {
  ExpectCode(ErrorCode::kEmptySet, [] { Validate(Make(2, {{1, 2}, {}})); });
  Instance neg = Make(2, {{1, 2}});
  neg.sets[0].weight = -1;
  ExpectCode(ErrorCode::kNegativeWeight, [&] { Validate(neg); });
  ExpectCode(ErrorCode::kEmptyInstance, [] { Validate(Make(0, {})); });
}

TEST(IsCover, Gf2DimensionTwo) {
  const Instance g = GenGf2(2);
  const std::vector<SetIndex> both = {0, 1};
  const std::vector<SetIndex> first = {0};
  const std::vector<SetIndex> all = {0, 1, 2};
  EXPECT_TRUE(IsCover(g, both));
  EXPECT_FALSE(IsCover(g, first));
  EXPECT_TRUE(IsCover(g, all));
  const std::vector<SetIndex> bad = {7};
  ExpectCode(ErrorCode::kIndexOutOfRange, [&] { IsCover(g, bad); });
}

TEST(ParseNative, OneSet) {
  const Instance inst = ParseNative("scp 1\n3 1\n5 3 1 2 3");
  EXPECT_EQ(inst.m, 3u);
  ASSERT_EQ(inst.n(), 1u);
  EXPECT_EQ(inst.sets[0].elements, (std::vector<Element>{1, 2, 3}));
  EXPECT_EQ(inst.sets[0].weight, Rational(5));
}

TEST(ParseNative, RationalAndDecimalWeights) {
  const Instance inst = ParseNative("scp 1\n2 2\n7/2 1 1\n1.25 1 2\n");
  EXPECT_EQ(inst.sets[0].weight, Rational(7, 2));
  EXPECT_EQ(inst.sets[1].weight, Rational(5, 4));
}

TEST(ParseNative, UnsupportedVersion) {
  ExpectCode(ErrorCode::kSyntaxError,
             [] { ParseNative("scp 2\n3 1\n5 3 1 2 3"); });
}

TEST(ParseNative, SyntaxErrorsCarryPosition) {
  try {
    ParseNative("scp 1\n3 1\n5 3 1 x 3");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_EQ(e.line(), std::optional<std::size_t>(3));
    EXPECT_EQ(e.column(), std::optional<std::size_t>(7));
  }
  ExpectCode(ErrorCode::kSyntaxError, [] { ParseNative("scp 1\n3 1\n5 3 1 2"); });
  ExpectCode(ErrorCode::kSyntaxError,
             [] { ParseNative("scp 1\n3 1\n5 3 1 2 3 9"); });
  ExpectCode(ErrorCode::kSyntaxError,
             [] { ParseNative("scp 1\n3 1\n5 3 1 1 3"); });
}

TEST(ParseNative, ElementOutOfRange) {
  ExpectCode(ErrorCode::kElementOutOfRange,
             [] { ParseNative("scp 1\n3 1\n5 3 1 2 14"); });
}

TEST(ParseOrLib, TransposesElementLists) {
  const Instance inst = ParseOrLib("3 2\n1 1\n1 1\n1 2\n2 1 2\n");
  EXPECT_EQ(inst.m, 3u);
  ASSERT_EQ(inst.n(), 2u);
  EXPECT_EQ(inst.sets[0].elements, (std::vector<Element>{1, 3}));
  EXPECT_EQ(inst.sets[1].elements, (std::vector<Element>{2, 3}));
  EXPECT_EQ(inst.sets[0].weight, Rational(1));
}

TEST(ParseOrLib, UncoveredElement) {
  ExpectCode(ErrorCode::kUnionNotUniverse,
             [] { ParseOrLib("3 2\n1 1\n1 1\n0\n2 1 2\n"); });
}

TEST(DetectFormat, HeaderDecides) {
  EXPECT_EQ(DetectFormat("scp 1\n3 1\n5 3 1 2 3"), InputFormat::kNative);
  EXPECT_EQ(DetectFormat("  3 2\n1 1"), InputFormat::kOrLib);
  EXPECT_EQ(ParseInstance("3 2\n1 1\n1 1\n1 2\n2 1 2\n").n(), 2u);
}

TEST(WriteNative, OneSetText) {
  EXPECT_EQ(WriteNative(testutil::SingleSet()), "scp 1\n3 1\n5 3 1 2 3");
}

TEST(WriteNative, RoundTripsRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    RandomSpec spec;
    spec.m = 9;
    spec.n = 7;
    spec.seed = seed;
    spec.weight_lo = Rational(1, 3);
    const Instance inst = GenRandom(spec);
    EXPECT_EQ(ParseNative(WriteNative(inst)), inst) << "seed " << seed;
  }
}

}  // namespace
}  // namespace cover
