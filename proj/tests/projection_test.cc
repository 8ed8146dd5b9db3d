//
// Copyright 2026 The anonhist Authors
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
//

#include "anonhist/projection.h"

#include <cstdint>
#include <random>
#include <vector>

#include "anonhist/enumeration.h"
#include "anonhist/errors.h"
#include "anonhist/partition.h"
#include "gtest/gtest.h"

namespace anonhist {
namespace {

IntegerPartition P(std::vector<int64_t> parts) {
  return IntegerPartition::FromParts(std::move(parts));
}

TEST(IsotonicL1, FeasibleInputIsIdentity) {
  const IsotonicFit fit = IsotonicL1({5, 2});
  EXPECT_EQ(fit.values, (std::vector<int64_t>{5, 2}));
  EXPECT_EQ(fit.cost, 0);
}

TEST(IsotonicL1, LowerMedianTieBreak) {
  // (4,4,2) and (5,5,2) are co-optimal at cost 2; the lower median picks
  // (3,3,2).
  const IsotonicFit fit = IsotonicL1({3, 5, 2});
  EXPECT_EQ(fit.values, (std::vector<int64_t>{3, 3, 2}));
  EXPECT_EQ(fit.cost, 2);
}

TEST(IsotonicL1, NegativeInputClipsToZero) {
  const IsotonicFit fit = IsotonicL1({-1, -2});
  EXPECT_EQ(fit.values, (std::vector<int64_t>{0, 0}));
  EXPECT_EQ(fit.cost, 3);
}

TEST(IsotonicL1, EmptyInput) {
  const IsotonicFit fit = IsotonicL1({});
  EXPECT_TRUE(fit.values.empty());
  EXPECT_EQ(fit.cost, 0);
}

TEST(IsotonicL1, CostFieldMatchesDistance) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int64_t> entry(-6, 9);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int64_t> input(static_cast<size_t>(trial % 9));
    for (auto& x : input) x = entry(rng);
    const IsotonicFit fit = IsotonicL1(input);
    EXPECT_EQ(fit.cost, L1Distance(fit.values, input));
    for (size_t i = 0; i + 1 < fit.values.size(); ++i) {
      ASSERT_GE(fit.values[i], fit.values[i + 1]);
    }
    if (!fit.values.empty()) {
      ASSERT_GE(fit.values.back(), 0);
    }
  }
}

// Exhaustive referee for short inputs: scan every nonincreasing nonnegative
// vector whose entries stay within the input's value range.
int64_t ExhaustiveIsotonicCost(const std::vector<int64_t>& input) {
  int64_t hi = 0;
  for (int64_t v : input) hi = std::max(hi, v);
  int64_t best = 0;
  for (int64_t v : input) best += std::abs(v);  // all-zero candidate
  std::vector<int64_t> candidate(input.size(), 0);
  const auto scan = [&](auto&& self, size_t i, int64_t cap) -> void {
    if (i == input.size()) {
      int64_t cost = 0;
      for (size_t j = 0; j < input.size(); ++j) {
        cost += std::abs(candidate[j] - input[j]);
      }
      best = std::min(best, cost);
      return;
    }
    for (int64_t v = 0; v <= cap; ++v) {
      candidate[i] = v;
      self(self, i + 1, v);
    }
  };
  if (!input.empty()) scan(scan, 0, hi + 1);
  return best;
}

TEST(IsotonicL1, MatchesExhaustiveScanOnShortGrid) {
  for (int64_t a = -3; a <= 5; ++a) {
    for (int64_t b = -3; b <= 5; ++b) {
      for (int64_t c = -3; c <= 5; ++c) {
        const std::vector<int64_t> input = {a, b, c};
        ASSERT_EQ(IsotonicL1(input).cost, ExhaustiveIsotonicCost(input))
            << a << "," << b << "," << c;
      }
    }
  }
}

TEST(ProjectToPartition, WorkedExamples) {
  EXPECT_EQ(ProjectToPartition({3, 5, 2}), P({3, 3, 2}));
  EXPECT_EQ(ProjectToPartition({0, 0, 0}), IntegerPartition());
  EXPECT_EQ(ProjectToPartition({}), IntegerPartition());
}

TEST(ProjectToPartition, IdempotentOnHistograms) {
  for (const IntegerPartition& p : EnumeratePartitions(10)) {
    EXPECT_EQ(ProjectToPartition(p.parts()), p);
  }
}

TEST(ProjectPrevalence, WorkedExamples) {
  EXPECT_EQ(ProjectPrevalence({3, 2, 0}), P({2, 2, 1}));
  EXPECT_EQ(ProjectPrevalence({2, 3}), P({2, 2}));
  EXPECT_EQ(ProjectPrevalence({0, 0, 0}), IntegerPartition());
}

TEST(ProjectPrevalence, OutputPrevalenceEqualsIsotonicFit) {
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<int64_t> entry(-2, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int64_t> input(4);
    for (auto& x : input) x = entry(rng);
    const IntegerPartition q = ProjectPrevalence(input);
    const std::vector<int64_t> fit = IsotonicL1(input).values;
    EXPECT_EQ(Prevalence(q, static_cast<int64_t>(input.size())).values, fit);
    // Parts never exceed the prevalence window.
    EXPECT_LE(q.PartAtRank(1), static_cast<int64_t>(input.size()));
  }
}

TEST(TrimToSize, WorkedExamples) {
  EXPECT_EQ(TrimToSize(P({3, 2}), 10), P({3, 2}));
  EXPECT_EQ(TrimToSize(P({3, 2}), 4), P({3, 1}));
  EXPECT_EQ(TrimToSize(P({3, 2}), 0), IntegerPartition());
}

TEST(TrimToSize, RemovesWholeSmallParts) {
  EXPECT_EQ(TrimToSize(P({3, 2, 2}), 3), P({3}));
  EXPECT_EQ(TrimToSize(P({5, 5}), 7), P({5, 2}));
}

TEST(TrimToSize, RejectsNegativeCap) {
  EXPECT_THROW(TrimToSize(P({1}), -1), PreconditionError);
}

TEST(TrimToSize, DistanceIsExactlyTheExcess) {
  for (const IntegerPartition& p : EnumeratePartitions(12)) {
    for (int64_t cap = 0; cap <= 14; ++cap) {
      const IntegerPartition trimmed = TrimToSize(p, cap);
      EXPECT_EQ(trimmed.size(), std::min(p.size(), cap));
      EXPECT_EQ(L1Distance(trimmed, p), std::max<int64_t>(0, p.size() - cap));
    }
  }
}

}  // namespace
}  // namespace anonhist
