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

#ifndef ANONHIST_PROJECTION_H_
#define ANONHIST_PROJECTION_H_

#include <cstdint>
#include <vector>

#include "anonhist/partition.h"

namespace anonhist {

// An L1-optimal monotone rounding of an integer vector.
struct IsotonicFit {
  // Nonincreasing, nonnegative, same length as the input.
  std::vector<int64_t> values;
  // L1Distance(values, input).
  int64_t cost = 0;
};

// Minimizes sum |values[i] - input[i]| over nonincreasing nonnegative integer
// vectors. Pool-adjacent-violators with block medians; ties inside even
// blocks resolve to the lower median, and the fit is clipped at 0 afterwards
// (clipping preserves optimality because the feasible set is closed under
// coordinate-wise min with any constant).
IsotonicFit IsotonicL1(const std::vector<int64_t>& input);

// The histogram nearest to `input` in L1: the isotonic fit with trailing
// zeros dropped. No bound is placed on the result's size, so this minimizes
// over all histograms whose parts fit in input.size() ranks.
IntegerPartition ProjectToPartition(const std::vector<int64_t>& input);

// The histogram q whose prevalence vector (thresholds 1..input.size()) is
// nearest to `input` in L1. Computed by fitting the prevalences and
// conjugating; every part of q is at most input.size().
IntegerPartition ProjectPrevalence(const std::vector<int64_t>& input);

// The histogram of size <= max_size nearest to p: removes size() - max_size
// units by decrementing the smallest parts first. Identity when p is already
// small enough.
IntegerPartition TrimToSize(const IntegerPartition& p, int64_t max_size);

}  // namespace anonhist

#endif  // ANONHIST_PROJECTION_H_
