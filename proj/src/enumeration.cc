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

#include "anonhist/enumeration.h"

#include <algorithm>

#include "anonhist/errors.h"
#include "anonhist/mechanism.h"

namespace anonhist {

namespace {

void AppendPartitionsOfSize(int64_t remaining, int64_t max_part,
                            std::vector<int64_t>& prefix,
                            std::vector<IntegerPartition>& out) {
  if (remaining == 0) {
    out.push_back(IntegerPartition::FromParts(prefix));
    return;
  }
  for (int64_t part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    AppendPartitionsOfSize(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<IntegerPartition> EnumeratePartitions(int64_t max_size) {
  if (max_size < 0) throw PreconditionError("max_size must be nonnegative");
  if (max_size > 40) {
    throw GuardrailError("partition enumeration is limited to size 40");
  }
  std::vector<IntegerPartition> all;
  std::vector<int64_t> prefix;
  for (int64_t size = 0; size <= max_size; ++size) {
    AppendPartitionsOfSize(size, size == 0 ? 1 : size, prefix, all);
  }
  return all;
}

ProjectionOracleResult BruteForceProject(const std::vector<int64_t>& values,
                                         int64_t max_size) {
  if (max_size < 0) throw PreconditionError("max_size must be nonnegative");
  if (max_size > 12) {
    throw GuardrailError("brute-force projection is limited to size 12");
  }
  ProjectionOracleResult best;
  bool have_best = false;
  for (const IntegerPartition& candidate : EnumeratePartitions(max_size)) {
    const int64_t cost = L1Distance(values, candidate.parts());
    if (!have_best || cost < best.cost ||
        (cost == best.cost && candidate.parts() < best.partition.parts())) {
      best.partition = candidate;
      best.cost = cost;
      have_best = true;
    }
  }
  return best;
}

SensitivityAuditReport SensitivityAudit(int64_t max_size) {
  if (max_size < 0) throw PreconditionError("max_size must be nonnegative");
  if (max_size > 12) {
    throw GuardrailError("the sensitivity audit is limited to size 12");
  }
  SensitivityAuditReport report;
  if (max_size == 0) return report;
  const std::vector<IntegerPartition> all = EnumeratePartitions(max_size);
  std::vector<SensitivityMapImage> images;
  images.reserve(all.size());
  for (const IntegerPartition& p : all) {
    images.push_back(SensitivityMap(p, max_size));
  }
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = 0; j < all.size(); ++j) {
      if (i == j || L1Distance(all[i], all[j]) != 1) continue;
      const int64_t image_distance =
          L1Distance(images[i].head, images[j].head) +
          L1Distance(images[i].low_prevalence, images[j].low_prevalence);
      report.max_image_distance =
          std::max(report.max_image_distance, image_distance);
      ++report.pairs_checked;
    }
  }
  return report;
}

}  // namespace anonhist
