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
// Exhaustive oracles. Deliberately slow and obviously correct; every one of
// them refuses inputs past a small guardrail so a typo cannot turn a test
// run into an overnight job.

#ifndef ANONHIST_ENUMERATION_H_
#define ANONHIST_ENUMERATION_H_

#include <cstdint>
#include <vector>

#include "anonhist/partition.h"

namespace anonhist {

// Every histogram of size <= max_size, without duplicates. Ordered by size,
// and within one size the first differing rank decides (larger count first):
// for size 5 that is (5), (4,1), (3,2), (3,1,1), (2,2,1), (2,1,1,1),
// (1,1,1,1,1). Guardrail: max_size <= 40.
std::vector<IntegerPartition> EnumeratePartitions(int64_t max_size);

struct ProjectionOracleResult {
  IntegerPartition partition;
  int64_t cost = 0;
};

// The histogram of size <= max_size nearest to `values` in L1 (rank-aligned,
// zero-padded), found by scanning every candidate. Among cost ties the
// lexicographically smallest parts vector wins, so the result is a function
// of the input. Guardrail: max_size <= 12.
ProjectionOracleResult BruteForceProject(const std::vector<int64_t>& values,
                                         int64_t max_size);

struct SensitivityAuditReport {
  int64_t pairs_checked = 0;
  int64_t max_image_distance = 0;
};

// Enumerates every ordered pair of histograms of size <= max_size at L1
// distance exactly 1 and measures how far SensitivityMap(., max_size) moves:
// L1 on the head plus L1 on the prevalences. The mechanisms' one-unit-per-
// coordinate noise budget is sound iff the maximum is 1.
// Guardrail: max_size <= 12.
SensitivityAuditReport SensitivityAudit(int64_t max_size);

}  // namespace anonhist

#endif  // ANONHIST_ENUMERATION_H_
