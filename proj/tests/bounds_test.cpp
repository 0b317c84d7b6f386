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

#include <cmath>
#include <vector>

#include "cover/bounds.hpp"
#include "cover/exact.hpp"
#include "cover/generators.hpp"
#include "cover/greedy.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace cover {
namespace {

using testutil::ExpectCode;

GreedyTrace TraceOf(std::vector<std::size_t> s) {
  GreedyTrace t;
  std::size_t rest = 0;
  for (auto x : s) rest += x;
  t.residuals.push_back(rest);
  for (std::size_t k = 0; k < s.size(); ++k) {
    rest -= s[k];
    t.residuals.push_back(rest);
    t.chosen.push_back(k);
    t.ratios.push_back(1);
  }
  t.s = std::move(s);
  t.total_weight = static_cast<long long>(t.s.size());
  return t;
}

TEST(Harmonic, KnownValues) {
  EXPECT_EQ(Harmonic(1), Rational(1));
  EXPECT_EQ(Harmonic(4), Rational(25, 12));
  EXPECT_EQ(Harmonic(10), Rational(7381, 2520));
  EXPECT_NEAR(ToDouble(Harmonic(10)), 2.9290, 1e-4);
  ExpectCode(ErrorCode::kNonPositiveArgument, [] { Harmonic(0); });
  for (std::size_t j = 1; j <= 40; ++j) EXPECT_EQ(Harmonic(j), oracle::Harmonic(j));
}

TEST(GOf, KnownValues) {
  EXPECT_EQ(GOf(TraceOf({10})), Rational(1));
  EXPECT_EQ(GOf(TraceOf({7, 3})), Rational(17, 10));
  EXPECT_EQ(GOf(TraceOf({1, 1, 1, 1})), Rational(25, 12));
}

TEST(GOf, RejectsBrokenTrace) {
  GreedyTrace t = TraceOf({2, 1});
  t.residuals = {3, 2, 0};
  ExpectCode(ErrorCode::kInvalidTrace, [&] { GOf(t); });
}

TEST(DeltaOf, KnownValues) {
  EXPECT_EQ(DeltaOf(TraceOf({1, 1, 1, 1, 1})), Rational(0));
  EXPECT_EQ(DeltaOf(TraceOf({10})), Rational(4861, 2520));
}

TEST(DeltaOf, MatchesHarmonicMinusGOnAllCompositions) {
  for (std::size_t m = 1; m <= 10; ++m) {
    oracle::Compositions(m, false, [&](const std::vector<std::size_t>& s) {
      const GreedyTrace t = TraceOf(s);
      EXPECT_EQ(DeltaOf(t), oracle::Harmonic(m) - oracle::G(s));
    });
  }
}

TEST(LogRatioBounds, TenAndTooSmall) {
  const LogBounds b = LogRatioBounds(10);
  EXPECT_NEAR(b.lower, 1.1586, 1e-4);
  EXPECT_NEAR(b.upper, 2.2486, 1e-4);
  ExpectCode(ErrorCode::kArgumentTooSmall, [] { LogRatioBounds(2); });
}

TEST(OptLowerBound, KnownValues) {
  EXPECT_EQ(OptLowerBound(Greedy(GenClassCs(SequenceSpec{{2, 1}}))),
            Rational(12, 5));
  EXPECT_EQ(OptLowerBound(Greedy(testutil::SingleSet())), Rational(5));
  EXPECT_EQ(OptLowerBound(Greedy(GenGf2(2))), Rational(6, 5));
}

TEST(BoundReport, ClassCsWithOptimum) {
  const Instance inst = GenClassCs(SequenceSpec{{2, 1}});
  const Cover opt = MakeCover(inst, {2});
  const BoundReport r = MakeBoundReport(inst, Greedy(inst), opt);
  EXPECT_EQ(r.H_m, Rational(11, 6));
  EXPECT_EQ(r.G, Rational(5, 3));
  EXPECT_EQ(r.Delta, Rational(1, 6));
  EXPECT_EQ(r.m_bar, 3u);
  EXPECT_EQ(r.m_tilde, std::optional<std::size_t>(3));
  EXPECT_EQ(r.ratio, std::optional<Rational>(Rational(8, 7)));
  const std::string kv = ToKeyValue(r);
  for (const char* key : {"H_m=", "H_m_bar=", "G=", "Delta=", "T_l=", "T_u=",
                          "opt_lower="}) {
    EXPECT_NE(kv.find(std::string("\n") + key), std::string::npos) << key;
  }
}

TEST(BoundReport, SingleSet) {
  const Instance inst = testutil::SingleSet();
  const BoundReport r = MakeBoundReport(inst, Greedy(inst), MakeCover(inst, {0}));
  EXPECT_EQ(r.G, Rational(1));
  EXPECT_EQ(r.Delta, Harmonic(3) - 1);
  EXPECT_EQ(r.ratio, std::optional<Rational>(Rational(1)));
}

TEST(BoundReport, NoOptimumLeavesTildeEmpty) {
  const Instance inst = GenGf2(3);
  const BoundReport r = MakeBoundReport(inst, Greedy(inst));
  EXPECT_FALSE(r.m_tilde.has_value());
  EXPECT_FALSE(r.ratio.has_value());
  EXPECT_EQ(ToKeyValue(r).find("m_tilde"), std::string::npos);
}

TEST(BoundReport, TraceFromAnotherInstance) {
  const GreedyTrace t = Greedy(GenGf2(3));
  ExpectCode(ErrorCode::kTraceMismatch,
             [&] { MakeBoundReport(GenGf2(2), t); });
}

TEST(BoundReport, FuzzedInvariants) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomSpec spec;
    spec.m = 10;
    spec.n = 8;
    spec.seed = seed;
    const Instance inst = GenRandom(spec);
    const ExactResult opt = ExactOpt(inst);
    const BoundReport r = MakeBoundReport(inst, Greedy(inst), opt.cover);
    EXPECT_EQ(r.Delta, r.H_m - r.G);
    EXPECT_LE(r.opt_lower, opt.weight);
    EXPECT_LE(*r.ratio, r.G);
    EXPECT_LE(*r.ratio, *r.H_m_tilde);
    EXPECT_LE(*r.H_m_tilde, r.H_m_bar);
    EXPECT_LE(r.H_m_bar, r.H_m);
  }
}

TEST(BoundReport, CsvHasHeaderAndRow) {
  const Instance inst = GenClassCs(SequenceSpec{{2, 1}});
  const std::string csv = ToCsv(MakeBoundReport(inst, Greedy(inst)));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

}  // namespace
}  // namespace cover
