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

#include "anonhist/lowerbound.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "anonhist/errors.h"
#include "anonhist/mechanism.h"

namespace anonhist {

namespace {

using int128 = __int128;

void CertifyOrThrow(bool condition, const char* what) {
  if (!condition) throw CertificationError(what);
}

void CheckBits(const BitVector& bits) {
  for (uint8_t b : bits) {
    if (b > 1) throw PreconditionError("bit entries must be 0 or 1");
  }
}

BitVector DrawBits(int64_t length, RandomStream& stream) {
  BitVector bits(length);
  uint64_t word = 0;
  for (int64_t i = 0; i < length; ++i) {
    if (i % 64 == 0) word = stream.NextWord();
    bits[i] = static_cast<uint8_t>((word >> (i % 64)) & 1);
  }
  return bits;
}

int64_t HammingDistance(const BitVector& a, const BitVector& b) {
  int64_t distance = 0;
  for (size_t i = 0; i < a.size(); ++i) distance += a[i] != b[i];
  return distance;
}

// True when the candidate is at Hamming distance >= threshold from `kept`.
// Bails out as soon as the running distance reaches the threshold.
bool FarEnough(const BitVector& candidate, const BitVector& kept,
               int64_t threshold) {
  int64_t distance = 0;
  for (size_t i = 0; i < candidate.size(); ++i) {
    distance += candidate[i] != kept[i];
    if (distance >= threshold) return true;
  }
  return distance >= threshold;
}

}  // namespace

EncodingSpec BuildEncodingSpec(int64_t n, int64_t delta) {
  if (n < 1 || delta < 1) {
    throw PreconditionError("n and delta must be positive");
  }
  if (delta > n) throw PreconditionError("delta must be at most n");
  // delta > 10 * sqrt(n), checked exactly as delta^2 > 100 * n.
  if (!(int128{delta} * delta > int128{100} * n)) {
    throw PreconditionError("delta must exceed 10 * sqrt(n)");
  }

  EncodingSpec spec;
  spec.n = n;
  spec.delta = delta;
  // level_count = floor(log_4(delta / sqrt(n))), computed exactly as the
  // largest k with 16^k * n <= delta^2. The precondition gives k >= 1.
  int128 pow16 = 16;
  int64_t levels = 0;
  while (pow16 * n <= int128{delta} * delta) {
    ++levels;
    pow16 *= 16;
  }
  spec.level_count = levels;
  spec.ranks_per_level = n / delta;
  spec.bit_length = spec.level_count * spec.ranks_per_level;

  const int64_t ranks = spec.ranks_per_level;
  int128 max_size = 0;
  for (int64_t level = 1; level <= levels; ++level) {
    const int64_t scale = spec.level_count << level;  // level_count * 2^level
    const int64_t base = delta / scale;
    const int64_t step = base / ranks;
    spec.base_count.push_back(base);
    spec.step.push_back(step);
    std::vector<int64_t> grid(ranks + 1);
    for (int64_t r = 0; r <= ranks; ++r) {
      grid[r] = base + (ranks - r) * step;
    }
    // Two-sided bounds, cross-multiplied to stay in integers:
    //   delta / (2 * scale) <= base <= delta / scale
    //   delta / (4 * scale * ranks) <= step <= delta / (scale * ranks)
    CertifyOrThrow(step >= 1, "encoding step collapsed to zero");
    CertifyOrThrow(int128{base} * 2 * scale >= delta &&
                       int128{base} * scale <= delta,
                   "encoding base count out of range");
    CertifyOrThrow(int128{step} * 4 * scale * ranks >= delta &&
                       int128{step} * scale * ranks <= delta,
                   "encoding step out of range");
    if (level > 1) {
      CertifyOrThrow(grid[0] <= spec.representative.back()[ranks],
                     "encoding levels overlap");
    }
    const int64_t copies = int64_t{1} << (level - 1);
    for (int64_t r = 0; r < ranks; ++r) {
      max_size += int128{copies} * grid[r];
    }
    spec.representative.push_back(std::move(grid));
  }
  CertifyOrThrow(max_size <= n, "encoded size can exceed the budget");
  // bit_length >= (1/8) * (n / delta) * log2(delta / sqrt(n)); generous
  // slack, so a double-precision check is safe.
  const double log_ratio =
      0.5 * std::log2(static_cast<double>(delta) / static_cast<double>(n) *
                      static_cast<double>(delta));
  CertifyOrThrow(static_cast<double>(spec.bit_length) >=
                     0.125 * (static_cast<double>(n) / delta) * log_ratio,
                 "bit length fell below the coverage bound");
  return spec;
}

IntegerPartition Encode(const EncodingSpec& spec, const BitVector& bits) {
  if (static_cast<int64_t>(bits.size()) != spec.bit_length) {
    throw PreconditionError("bit vector length does not match the spec");
  }
  CheckBits(bits);
  const int64_t ranks = spec.ranks_per_level;
  std::vector<int64_t> parts;
  parts.reserve(ranks * ((int64_t{1} << spec.level_count) - 1));
  for (int64_t level = 0; level < spec.level_count; ++level) {
    const int64_t copies = int64_t{1} << level;
    for (int64_t r = 0; r < ranks; ++r) {
      const bool raised = bits[level * ranks + r] != 0;
      const int64_t count =
          raised ? spec.representative[level][r] : spec.representative[level][r + 1];
      parts.insert(parts.end(), copies, count);
    }
  }
  return IntegerPartition::FromParts(std::move(parts));
}

BitVector DecodeNearest(const EncodingSpec& spec, const IntegerPartition& p) {
  BitVector bits(spec.bit_length);
  const int64_t ranks = spec.ranks_per_level;
  int64_t rank_cursor = 0;
  for (int64_t level = 0; level < spec.level_count; ++level) {
    const int64_t copies = int64_t{1} << level;
    for (int64_t r = 0; r < ranks; ++r) {
      const int64_t raised = spec.representative[level][r];
      const int64_t lowered = spec.representative[level][r + 1];
      int64_t cost_lowered = 0;
      int64_t cost_raised = 0;
      for (int64_t c = 1; c <= copies; ++c) {
        const int64_t observed = p.PartAtRank(rank_cursor + c);
        cost_lowered += std::abs(observed - lowered);
        cost_raised += std::abs(observed - raised);
      }
      bits[level * ranks + r] = cost_raised < cost_lowered ? 1 : 0;
      rank_cursor += copies;
    }
  }
  return bits;
}

BitVector DecodeNearestExhaustive(const EncodingSpec& spec,
                                  const IntegerPartition& p) {
  if (spec.bit_length > 20) {
    throw GuardrailError("exhaustive decoding is limited to 20 bits");
  }
  const uint64_t limit = uint64_t{1} << spec.bit_length;
  BitVector bits(spec.bit_length);
  BitVector best;
  int64_t best_distance = 0;
  for (uint64_t mask = 0; mask < limit; ++mask) {
    for (int64_t i = 0; i < spec.bit_length; ++i) {
      bits[i] = static_cast<uint8_t>((mask >> i) & 1);
    }
    const int64_t distance = L1Distance(Encode(spec, bits), p);
    if (best.empty() ? true : distance < best_distance) {
      best = bits;
      best_distance = distance;
    }
  }
  return best;
}

IntegerPartition EncodeLowPriv(const BitVector& bits, int64_t n) {
  if (n < 1) throw PreconditionError("n must be positive");
  CheckBits(bits);
  const int64_t length = FloorSqrt(n);
  if (static_cast<int64_t>(bits.size()) != length) {
    throw PreconditionError("bit vector length must equal FloorSqrt(n)");
  }
  std::vector<int64_t> counts(length);
  for (int64_t i = 0; i < length; ++i) {
    counts[i] = 2 * (length - 1 - i) + bits[i];
  }
  return IntegerPartition::FromCounts(std::move(counts));
}

ReductionProbeResult ReductionErrorProbe(
    const std::function<IntegerPartition(const IntegerPartition&)>& mechanism,
    const EncodingSpec& spec, int64_t trials, RandomStream& stream,
    const std::optional<PrivacyBudget>& mechanism_budget) {
  if (trials < 1) throw PreconditionError("trials must be positive");
  ReductionProbeResult result;
  result.trials = trials;
  for (int64_t level = 0; level < spec.level_count; ++level) {
    result.flip_distance = std::max(result.flip_distance,
                                    (int64_t{1} << level) * spec.step[level]);
  }
  int64_t total_error = 0;
  for (int64_t t = 0; t < trials; ++t) {
    const BitVector bits = DrawBits(spec.bit_length, stream);
    const IntegerPartition released = mechanism(Encode(spec, bits));
    total_error += HammingDistance(bits, DecodeNearest(spec, released));
  }
  result.mean_error =
      static_cast<double>(total_error) / static_cast<double>(trials);
  if (mechanism_budget.has_value()) {
    const PrivacyBudget amplified =
        GroupPrivacy(*mechanism_budget, result.flip_distance);
    result.error_floor = std::exp(-amplified.epsilon) *
                         static_cast<double>(spec.bit_length) * 0.5 *
                         (1.0 - amplified.delta);
  }
  return result;
}

PackingResult GeneratePacking(int64_t n, int64_t delta, int64_t attempts,
                              RandomStream& stream) {
  if (attempts < 0) throw PreconditionError("attempts must be nonnegative");
  PackingResult result;
  result.spec = BuildEncodingSpec(n, delta);
  const int64_t threshold = (result.spec.bit_length + 9) / 10;  // ceil(m/10)
  std::vector<BitVector> kept;
  for (int64_t a = 0; a < attempts; ++a) {
    BitVector candidate = DrawBits(result.spec.bit_length, stream);
    bool keep = true;
    for (const BitVector& other : kept) {
      if (!FarEnough(candidate, other, threshold)) {
        keep = false;
        break;
      }
    }
    if (keep) {
      result.partitions.push_back(Encode(result.spec, candidate));
      kept.push_back(std::move(candidate));
    }
  }
  const int64_t lower = (delta + 99) / 100;  // ceil(delta/100)
  bool first_pair = true;
  for (size_t i = 0; i < result.partitions.size(); ++i) {
    for (size_t j = i + 1; j < result.partitions.size(); ++j) {
      const int64_t distance =
          L1Distance(result.partitions[i], result.partitions[j]);
      if (first_pair) {
        result.min_pairwise = result.max_pairwise = distance;
        first_pair = false;
      } else {
        result.min_pairwise = std::min(result.min_pairwise, distance);
        result.max_pairwise = std::max(result.max_pairwise, distance);
      }
      if (distance < lower || distance > delta) {
        throw CertificationError("packing distance outside certified range");
      }
    }
  }
  return result;
}

}  // namespace anonhist
