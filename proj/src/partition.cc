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

#include "anonhist/partition.h"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "anonhist/errors.h"

namespace anonhist {

namespace {

int64_t CheckedSum(const std::vector<int64_t>& values) {
  int64_t total = 0;
  for (int64_t v : values) {
    if (__builtin_add_overflow(total, v, &total)) {
      throw PreconditionError("histogram size overflows int64");
    }
  }
  return total;
}

}  // namespace

IntegerPartition IntegerPartition::FromCounts(std::vector<int64_t> counts) {
  for (int64_t c : counts) {
    if (c < 0) throw PreconditionError("counts must be nonnegative");
  }
  std::erase(counts, 0);
  std::sort(counts.begin(), counts.end(), std::greater<int64_t>());
  IntegerPartition p;
  p.size_ = CheckedSum(counts);
  p.parts_ = std::move(counts);
  return p;
}

IntegerPartition IntegerPartition::FromParts(std::vector<int64_t> parts) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw PreconditionError("parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw PreconditionError("parts must be nonincreasing");
    }
  }
  IntegerPartition p;
  p.size_ = CheckedSum(parts);
  p.parts_ = std::move(parts);
  return p;
}

int64_t IntegerPartition::PartAtRank(int64_t rank) const {
  if (rank < 1) throw PreconditionError("rank must be positive");
  if (rank > num_parts()) return 0;
  return parts_[rank - 1];
}

int64_t L1Distance(const std::vector<int64_t>& a,
                   const std::vector<int64_t>& b) {
  const size_t n = std::max(a.size(), b.size());
  int64_t total = 0;
  for (size_t i = 0; i < n; ++i) {
    const int64_t av = i < a.size() ? a[i] : 0;
    const int64_t bv = i < b.size() ? b[i] : 0;
    total += std::abs(av - bv);
  }
  return total;
}

int64_t L1Distance(const IntegerPartition& a, const IntegerPartition& b) {
  return L1Distance(a.parts(), b.parts());
}

PrevalenceVector Prevalence(const IntegerPartition& p, int64_t length) {
  if (length < 1) throw PreconditionError("prevalence length must be positive");
  const auto& parts = p.parts();
  PrevalenceVector result;
  result.values.resize(length);
  // parts is nonincreasing, so the number of parts >= r only shrinks as the
  // threshold r grows; sweep one pointer from the small end.
  size_t at_least = parts.size();
  for (int64_t r = 1; r <= length; ++r) {
    while (at_least > 0 && parts[at_least - 1] < r) --at_least;
    result.values[r - 1] = static_cast<int64_t>(at_least);
  }
  return result;
}

IntegerPartition Conjugate(const PrevalenceVector& prevalence) {
  if (prevalence.origin_rank != 1) {
    throw PreconditionError("conjugation requires origin rank 1");
  }
  const auto& c = prevalence.values;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) throw PreconditionError("prevalences must be nonnegative");
    if (i > 0 && c[i] > c[i - 1]) {
      throw PreconditionError("prevalences must be nonincreasing");
    }
  }
  const int64_t num_parts = c.empty() ? 0 : c[0];
  std::vector<int64_t> parts(num_parts);
  size_t at_least = c.size();
  for (int64_t i = 1; i <= num_parts; ++i) {
    while (at_least > 0 && c[at_least - 1] < i) --at_least;
    parts[i - 1] = static_cast<int64_t>(at_least);
  }
  return IntegerPartition::FromParts(std::move(parts));
}

IntegerPartition MultisetUnion(const IntegerPartition& a,
                               const IntegerPartition& b) {
  std::vector<int64_t> merged;
  merged.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
             b.parts().end(), std::back_inserter(merged),
             std::greater<int64_t>());
  return IntegerPartition::FromParts(std::move(merged));
}

RankSplit SplitAtRank(const IntegerPartition& p, int64_t rank) {
  if (rank < 1) throw PreconditionError("split rank must be positive");
  const auto& parts = p.parts();
  RankSplit split;
  split.head.resize(rank, 0);
  const size_t head_count =
      std::min(parts.size(), static_cast<size_t>(rank));
  std::copy(parts.begin(), parts.begin() + head_count, split.head.begin());
  split.tail = IntegerPartition::FromParts(
      std::vector<int64_t>(parts.begin() + head_count, parts.end()));
  return split;
}

}  // namespace anonhist
