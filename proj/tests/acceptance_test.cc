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

// End-to-end release gate. Each test is one externally checkable property of
// the library with its tolerance pinned in the assertion; a release is good
// when every line below reports OK.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "anonhist/enumeration.h"
#include "anonhist/experiment.h"
#include "anonhist/lowerbound.h"
#include "anonhist/mechanism.h"
#include "anonhist/noise.h"
#include "anonhist/partition.h"
#include "anonhist/projection.h"
#include "gtest/gtest.h"

namespace anonhist {
namespace {

BitVector RandomBits(RandomStream& stream, int64_t count) {
  BitVector bits(static_cast<size_t>(count));
  for (auto& bit : bits) {
    bit = static_cast<uint8_t>(stream.NextWord() & 1u);
  }
  return bits;
}

int64_t Hamming(const BitVector& a, const BitVector& b) {
  int64_t distance = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) ++distance;
  }
  return distance;
}

TEST(Acceptance, PrevalenceViewPreservesAllPairwiseDistances) {
  const std::vector<IntegerPartition> all = EnumeratePartitions(8);
  for (const IntegerPartition& p : all) {
    for (const IntegerPartition& q : all) {
      const int64_t direct = L1Distance(p, q);
      const int64_t via_prevalence =
          L1Distance(Prevalence(p, 8).values, Prevalence(q, 8).values);
      ASSERT_EQ(direct, via_prevalence)
          << "between size-" << p.size() << " and size-" << q.size();
    }
  }
}

TEST(Acceptance, NeighborAuditReportsUnitSensitivity) {
  const SensitivityAuditReport report = SensitivityAudit(10);
  EXPECT_EQ(report.pairs_checked, 568);
  EXPECT_EQ(report.max_image_distance, 1);
}

TEST(Acceptance, IsotonicFitCostMatchesExhaustiveMinimum) {
  const std::vector<IntegerPartition> candidates = EnumeratePartitions(20);
  int64_t cases = 0;
  for (int length = 0; length <= 4; ++length) {
    std::vector<int64_t> values(static_cast<size_t>(length), -3);
    while (true) {
      const int64_t fast_cost = IsotonicL1(values).cost;
      int64_t best = std::numeric_limits<int64_t>::max();
      for (const IntegerPartition& q : candidates) {
        best = std::min(best, L1Distance(values, q.parts()));
      }
      ASSERT_EQ(fast_cost, best) << "case " << cases;
      ++cases;
      int i = 0;
      for (; i < length; ++i) {
        if (values[static_cast<size_t>(i)] < 5) {
          ++values[static_cast<size_t>(i)];
          break;
        }
        values[static_cast<size_t>(i)] = -3;
      }
      if (i == length) break;
    }
  }
  EXPECT_EQ(cases, 7381);
}

TEST(Acceptance, ZeroNoiseReleasesReturnTheInputExactly) {
  ConstantStream zero;
  for (const IntegerPartition& p : EnumeratePartitions(20)) {
    ASSERT_EQ(DpAnonHist(p, 1.0, 20, zero), p) << "size " << p.size();
    ASSERT_EQ(DpAnonHistUnknownN(p, 2.0, zero), p) << "size " << p.size();
  }
}

TEST(Acceptance, MeanErrorDecaysExponentiallyInTheBudget) {
  const IntegerPartition input = MakeShapeInput(ShapeKind::kStaircase, 10000);
  std::vector<double> means;
  for (int eps = 1; eps <= 5; ++eps) {
    ReleaseConfig config;
    config.epsilon = eps;
    config.size_bound = 10000;
    config.kind = MechanismKind::kAlg1;
    config.seed = 42;
    const ExperimentReport report = RunErrorExperiment(config, input, 200);
    EXPECT_LE(report.mean_error, 10.0 * 100.0 * std::exp(-eps))
        << "epsilon " << eps;
    means.push_back(report.mean_error);
  }
  for (size_t i = 0; i + 1 < means.size(); ++i) {
    const double ratio = means[i] / means[i + 1];
    EXPECT_GE(ratio, 1.5) << "between epsilon " << i + 1 << " and " << i + 2;
    EXPECT_LE(ratio, 5.0) << "between epsilon " << i + 1 << " and " << i + 2;
  }
}

TEST(Acceptance, SamplerTotalVariationStaysBelowBound) {
  const GeometricNoise noise(std::exp(-1.0));
  SeededStream stream(12345, 0);
  constexpr int kWindow = 20;
  constexpr int64_t kSamples = 1000000;
  std::array<int64_t, 2 * kWindow + 1> counts{};
  int64_t outside = 0;
  for (int64_t i = 0; i < kSamples; ++i) {
    const int64_t value = noise.Sample(stream);
    if (value >= -kWindow && value <= kWindow) {
      ++counts[static_cast<size_t>(value + kWindow)];
    } else {
      ++outside;
    }
  }
  double tv = 0.0;
  for (int v = -kWindow; v <= kWindow; ++v) {
    const double empirical =
        static_cast<double>(counts[static_cast<size_t>(v + kWindow)]) /
        static_cast<double>(kSamples);
    tv += std::abs(empirical - noise.Pmf(v));
  }
  const double outside_mass = 2.0 * noise.UpperTail(kWindow + 1);
  tv += std::abs(static_cast<double>(outside) /
                     static_cast<double>(kSamples) -
                 outside_mass);
  tv *= 0.5;
  EXPECT_LE(tv, 0.005);
}

TEST(Acceptance, EncodingDistortionStaysInsideTheBand) {
  const EncodingSpec spec = BuildEncodingSpec(1000000, 100000);
  ASSERT_EQ(spec.bit_length, 30);
  SeededStream stream(777, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    const BitVector u = RandomBits(stream, spec.bit_length);
    BitVector v = RandomBits(stream, spec.bit_length);
    while (v == u) v = RandomBits(stream, spec.bit_length);
    const IntegerPartition pu = Encode(spec, u);
    const IntegerPartition pv = Encode(spec, v);
    ASSERT_LE(pu.size(), spec.n);
    ASSERT_LE(pv.size(), spec.n);
    const int64_t dist = L1Distance(pu, pv);
    const int64_t ham = Hamming(u, v);
    ASSERT_GE(8 * spec.bit_length * dist, spec.delta * ham)
        << "trial " << trial;
    ASSERT_LE(2 * spec.bit_length * dist, spec.delta * ham)
        << "trial " << trial;
  }
}

TEST(Acceptance, FastDecoderMatchesExhaustiveAndRoundTrips) {
  const EncodingSpec small = BuildEncodingSpec(13000, 2000);
  ASSERT_EQ(small.bit_length, 12);
  SeededStream bit_stream(31, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const BitVector z = RandomBits(bit_stream, small.bit_length);
    SeededStream noise_stream(99, static_cast<uint64_t>(trial));
    const IntegerPartition noisy =
        DpAnonHist(Encode(small, z), 0.05, small.n, noise_stream);
    ASSERT_EQ(DecodeNearest(small, noisy),
              DecodeNearestExhaustive(small, noisy))
        << "trial " << trial;
  }

  const EncodingSpec large = BuildEncodingSpec(1000000, 100000);
  for (int trial = 0; trial < 1000; ++trial) {
    const BitVector z = RandomBits(bit_stream, large.bit_length);
    ASSERT_EQ(DecodeNearest(large, Encode(large, z)), z) << "trial " << trial;
  }
}

TEST(Acceptance, LowPrivacyEncodingIsAnExactIsometry) {
  constexpr int kBits = 6;
  constexpr int64_t kN = 36;
  std::vector<BitVector> words;
  std::vector<IntegerPartition> images;
  for (uint32_t mask = 0; mask < (1u << kBits); ++mask) {
    BitVector bits(kBits);
    for (int i = 0; i < kBits; ++i) {
      bits[static_cast<size_t>(i)] = static_cast<uint8_t>((mask >> i) & 1u);
    }
    words.push_back(bits);
    images.push_back(EncodeLowPriv(bits, kN));
  }
  for (size_t a = 0; a < words.size(); ++a) {
    for (size_t b = 0; b < words.size(); ++b) {
      ASSERT_EQ(L1Distance(images[a], images[b]), Hamming(words[a], words[b]))
          << a << " vs " << b;
    }
  }
}

TEST(Acceptance, GreedyPackingYieldsEnoughCertifiedPoints) {
  SeededStream stream(2026, 0);
  const PackingResult packing = GeneratePacking(10000, 1100, 100000, stream);
  EXPECT_GE(static_cast<int64_t>(packing.partitions.size()), 50);
  EXPECT_GE(packing.min_pairwise, 11);
  EXPECT_LE(packing.max_pairwise, 1100);

  int64_t min_seen = std::numeric_limits<int64_t>::max();
  int64_t max_seen = 0;
  for (size_t i = 0; i < packing.partitions.size(); ++i) {
    for (size_t j = i + 1; j < packing.partitions.size(); ++j) {
      const int64_t d =
          L1Distance(packing.partitions[i], packing.partitions[j]);
      min_seen = std::min(min_seen, d);
      max_seen = std::max(max_seen, d);
    }
  }
  EXPECT_EQ(min_seen, packing.min_pairwise);
  EXPECT_EQ(max_seen, packing.max_pairwise);
}

TEST(Acceptance, NegativeTailsAndUnknownSizeStayCalibrated) {
  const GeometricNoise noise(std::exp(-1.0));
  SeededStream stream(12345, 0);
  constexpr int64_t kSamples = 1000000;
  std::array<int64_t, 3> at_most_minus_k{};
  for (int64_t i = 0; i < kSamples; ++i) {
    const int64_t value = noise.Sample(stream);
    for (int64_t k = 1; k <= 3; ++k) {
      if (value <= -k) ++at_most_minus_k[static_cast<size_t>(k - 1)];
    }
  }
  for (int64_t k = 1; k <= 3; ++k) {
    const double expected = noise.UpperTail(k);
    const double empirical =
        static_cast<double>(at_most_minus_k[static_cast<size_t>(k - 1)]) /
        static_cast<double>(kSamples);
    const double stderr_k = std::sqrt(expected * (1.0 - expected) /
                                      static_cast<double>(kSamples));
    EXPECT_NEAR(empirical, expected, 3.0 * stderr_k) << "k " << k;
  }

  const IntegerPartition input = MakeShapeInput(ShapeKind::kStaircase, 10000);
  ReleaseConfig unknown;
  unknown.epsilon = 3.0;
  unknown.kind = MechanismKind::kAlg2;
  unknown.seed = 42;
  ReleaseConfig known;
  known.epsilon = 2.0;
  known.size_bound = 10000;
  known.kind = MechanismKind::kAlg1;
  known.seed = 42;
  const double unknown_mean =
      RunErrorExperiment(unknown, input, 200).mean_error;
  const double known_mean = RunErrorExperiment(known, input, 200).mean_error;
  EXPECT_LE(unknown_mean, 2.0 * known_mean);
}

TEST(Acceptance, GroupPrivacyMatchesTheClosedForm) {
  const PrivacyBudget out = GroupPrivacy(PrivacyBudget(0.1, 0.01), 3);
  EXPECT_NEAR(out.epsilon, 0.3, 0.3 * 1e-6);
  const double formula =
      0.01 * (std::exp(0.3) - 1.0) / (std::exp(0.1) - 1.0);
  EXPECT_NEAR(out.delta, formula, formula * 1e-6);
}

}  // namespace
}  // namespace anonhist
