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

#ifndef ANONHIST_PARTITION_H_
#define ANONHIST_PARTITION_H_

#include <cstdint>
#include <vector>

namespace anonhist {

// An anonymized histogram: the multiset of positive counts of a histogram,
// with the item labels discarded. Stored canonically as a nonincreasing
// vector of positive 64-bit counts; zero counts are never stored.
//
// Distances between two such objects are always taken coordinate-wise after
// aligning both sorted vectors at rank 1 and padding the shorter one with
// zeros (see L1Distance). Under that convention the objects form a metric
// space regardless of how many parts each side has.
class IntegerPartition {
 public:
  // The empty histogram (no parts, size 0).
  IntegerPartition() = default;

  // Canonicalizes an arbitrary multiset of counts: rejects negative counts,
  // drops zeros, sorts the rest in nonincreasing order.
  static IntegerPartition FromCounts(std::vector<int64_t> counts);

  // Adopts counts that must already be positive and nonincreasing; rejects
  // anything else. Cheaper than FromCounts when the order is known.
  static IntegerPartition FromParts(std::vector<int64_t> parts);

  // Counts in nonincreasing order.
  const std::vector<int64_t>& parts() const { return parts_; }

  // Sum of all counts. Overflow past int64 is rejected at construction.
  int64_t size() const { return size_; }

  int64_t num_parts() const { return static_cast<int64_t>(parts_.size()); }

  // Count at 1-based rank; 0 beyond the stored parts.
  int64_t PartAtRank(int64_t rank) const;

  friend bool operator==(const IntegerPartition&,
                         const IntegerPartition&) = default;

 private:
  std::vector<int64_t> parts_;
  int64_t size_ = 0;
};

// A vector of cumulative prevalences: values[r-1] counts how many parts are
// >= r, for thresholds r = origin_rank, origin_rank + 1, ... Always
// nonincreasing and nonnegative.
struct PrevalenceVector {
  std::vector<int64_t> values;
  int64_t origin_rank = 1;
};

// An integer vector produced by adding signed noise to counts. Entries may be
// negative and need not be monotone; it is the input type of the projections.
struct NoisedIntVector {
  std::vector<int64_t> values;
};

// The first `rank` counts (zero-padded to exactly `rank` entries) and the
// remaining counts as their own histogram.
struct RankSplit {
  std::vector<int64_t> head;
  IntegerPartition tail;
};

// L1 distance between two integer vectors, treating missing trailing
// coordinates as 0. Symmetric and a metric on vectors modulo trailing zeros.
int64_t L1Distance(const std::vector<int64_t>& a, const std::vector<int64_t>& b);

// L1 distance between histograms under the rank-aligned convention above.
int64_t L1Distance(const IntegerPartition& a, const IntegerPartition& b);

// Prevalences of p for thresholds 1..length (length >= 1).
PrevalenceVector Prevalence(const IntegerPartition& p, int64_t length);

// Inverts a prevalence vector back to the histogram whose prevalences it is:
// the part at rank i of the result is |{r : values[r-1] >= i}|. Requires
// origin_rank == 1 and a nonincreasing, nonnegative vector. Every part of the
// result is at most values.size(). Applied twice (through Prevalence) this is
// an involution on histograms with parts bounded by the vector length.
IntegerPartition Conjugate(const PrevalenceVector& prevalence);

// Multiset union of the two histograms' counts.
IntegerPartition MultisetUnion(const IntegerPartition& a,
                               const IntegerPartition& b);

// Splits p at the given rank (rank >= 1).
RankSplit SplitAtRank(const IntegerPartition& p, int64_t rank);

}  // namespace anonhist

#endif  // ANONHIST_PARTITION_H_
