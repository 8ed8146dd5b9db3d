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

#ifndef ANONHIST_LOWERBOUND_H_
#define ANONHIST_LOWERBOUND_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "anonhist/noise.h"
#include "anonhist/partition.h"

namespace anonhist {

// A bit, one per entry. Entries are 0 or 1.
using BitVector = std::vector<uint8_t>;

// Parameters of the distance-stretching embedding of bit vectors into
// histograms of size <= n. Bits are grouped into `level_count` levels of
// `ranks_per_level` bits each. Level l (1-based) encodes each of its bits as
// a count chosen from an arithmetic grid
//
//   representative[l-1][r] = base_count[l-1] + (ranks_per_level - r) * step[l-1]
//
// (r = 0..ranks_per_level, descending), and repeats that count 2^(l-1) times,
// so flipping one bit at level l moves the encoded histogram by exactly
// 2^(l-1) * step[l-1] in L1. The grids shrink geometrically across levels,
// which keeps the total size under n while every bit flip still moves the
// image by roughly delta / bit_length.
struct EncodingSpec {
  int64_t n = 0;      // size budget for every encoded histogram
  int64_t delta = 0;  // target distance scale; requires n >= delta > 10*sqrt(n)
  int64_t level_count = 0;      // floor(log_4(delta / sqrt(n)))
  int64_t ranks_per_level = 0;  // floor(n / delta)
  int64_t bit_length = 0;       // level_count * ranks_per_level
  std::vector<int64_t> base_count;  // per level: smallest grid count
  std::vector<int64_t> step;        // per level: grid spacing
  std::vector<std::vector<int64_t>> representative;  // per level: the grid
};

// Derives all parameters from (n, delta) and certifies the construction:
// grid positivity, the two-sided bounds on base counts and steps, the
// monotonicity of the concatenated image, and the size budget. Requires
// n >= delta and delta^2 > 100 * n (checked exactly in integers).
EncodingSpec BuildEncodingSpec(int64_t n, int64_t delta);

// The histogram encoding `bits` (length must equal spec.bit_length). The
// bit at level l, rank r picks representative r-1 (bit set) or r (bit clear),
// repeated 2^(l-1) times; levels are concatenated in order. The result is
// always a valid histogram of size <= spec.n with exactly
// ranks_per_level * (2^level_count - 1) parts.
IntegerPartition Encode(const EncodingSpec& spec, const BitVector& bits);

// The bit vector whose encoding is L1-nearest to p. Each bit owns a fixed,
// disjoint run of ranks, and both candidate counts for the bit keep the
// whole image nonincreasing, so the global argmin decomposes into one
// two-way comparison per bit; ties resolve to 0. Runs in
// O(parts + bit_length) regardless of p.
BitVector DecodeNearest(const EncodingSpec& spec, const IntegerPartition& p);

// Reference decoder: scans all 2^bit_length candidates (first minimum in
// ascending-integer order, bit i = integer bit i, which matches the
// per-bit ties-to-0 rule of DecodeNearest). Guardrail: bit_length <= 20.
BitVector DecodeNearestExhaustive(const EncodingSpec& spec,
                                  const IntegerPartition& p);

// The small-noise embedding: bit i of m = FloorSqrt(n) bits becomes a count
// 2*(m-i) + bits[i-1] (1-based i), so distinct bit vectors map to histograms
// whose L1 distance equals the Hamming distance exactly, with size <= n.
// Requires bits.size() == FloorSqrt(n).
IntegerPartition EncodeLowPriv(const BitVector& bits, int64_t n);

// Outcome of a decode-through-mechanism round trip experiment.
struct ReductionProbeResult {
  int64_t trials = 0;
  // Mean Hamming distance between the drawn bits and the decoded bits.
  double mean_error = 0.0;
  // Largest L1 movement of the encoding under a single bit flip:
  // max over levels of 2^(l-1) * step[l-1].
  int64_t flip_distance = 0;
  // If a budget was supplied: the random-bit-vector error floor
  // e^-eps' * bit_length / 2 * (1 - delta') that any release with that
  // guarantee must respect, where (eps', delta') is the supplied budget
  // amplified by GroupPrivacy(budget, flip_distance). 0 when no budget.
  double error_floor = 0.0;
};

// Draws `trials` uniform bit vectors (bits come from `stream`, packed 64 per
// word, bit i of the trial's words in word i/64 at position i%64), pushes
// each encoding through `mechanism`, decodes the output with DecodeNearest,
// and reports the mean Hamming error. `mechanism_budget`, when present,
// states the privacy guarantee of `mechanism` for inputs at L1 distance 1 and
// is used to compute the floor above; pass nullopt for non-private
// mechanisms (identity, constant).
ReductionProbeResult ReductionErrorProbe(
    const std::function<IntegerPartition(const IntegerPartition&)>& mechanism,
    const EncodingSpec& spec, int64_t trials, RandomStream& stream,
    const std::optional<PrivacyBudget>& mechanism_budget);

// A set of histograms of size <= n that are pairwise far apart but uniformly
// close together, with the certified distance range.
struct PackingResult {
  EncodingSpec spec;
  std::vector<IntegerPartition> partitions;
  int64_t min_pairwise = 0;  // 0 when fewer than two survive
  int64_t max_pairwise = 0;
};

// Greedy sphere packing through the encoding: draws `attempts` uniform bit
// vectors and keeps each one whose Hamming distance to every kept vector is
// at least ceil(bit_length / 10), then encodes the keepers. Certifies that
// all pairwise L1 distances lie in [ceil(delta / 100), delta] and throws
// CertificationError otherwise.
PackingResult GeneratePacking(int64_t n, int64_t delta, int64_t attempts,
                              RandomStream& stream);

}  // namespace anonhist

#endif  // ANONHIST_LOWERBOUND_H_
