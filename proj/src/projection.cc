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

#include <algorithm>
#include <cstdlib>

#include "anonhist/errors.h"

namespace anonhist {

namespace {

// One pooled block of the (reversed, nondecreasing) fit. Values are kept
// sorted so the lower median is an index lookup and merges stay cheap.
struct Block {
  std::vector<int64_t> sorted_values;

  int64_t Median() const {
    return sorted_values[(sorted_values.size() - 1) / 2];
  }
};

}  // namespace

IsotonicFit IsotonicL1(const std::vector<int64_t>& input) {
  // Fit a nondecreasing sequence to the reversed input: pooling adjacent
  // blocks whose medians are out of order is exact for L1 because the lower
  // median minimizes each pooled block.
  std::vector<Block> blocks;
  for (auto it = input.rbegin(); it != input.rend(); ++it) {
    blocks.push_back(Block{{*it}});
    while (blocks.size() >= 2 &&
           blocks.back().Median() < blocks[blocks.size() - 2].Median()) {
      Block merged = std::move(blocks[blocks.size() - 2]);
      const size_t old_size = merged.sorted_values.size();
      Block& top = blocks.back();
      merged.sorted_values.insert(merged.sorted_values.end(),
                                  top.sorted_values.begin(),
                                  top.sorted_values.end());
      std::inplace_merge(merged.sorted_values.begin(),
                         merged.sorted_values.begin() + old_size,
                         merged.sorted_values.end());
      blocks.pop_back();
      blocks.back() = std::move(merged);
    }
  }

  IsotonicFit fit;
  fit.values.reserve(input.size());
  for (auto block = blocks.rbegin(); block != blocks.rend(); ++block) {
    const int64_t level = std::max<int64_t>(block->Median(), 0);
    fit.values.insert(fit.values.end(), block->sorted_values.size(), level);
  }
  for (size_t i = 0; i < input.size(); ++i) {
    fit.cost += std::abs(fit.values[i] - input[i]);
  }
  return fit;
}

IntegerPartition ProjectToPartition(const std::vector<int64_t>& input) {
  IsotonicFit fit = IsotonicL1(input);
  // The fit is nonincreasing, so zeros form a suffix.
  while (!fit.values.empty() && fit.values.back() == 0) fit.values.pop_back();
  return IntegerPartition::FromParts(std::move(fit.values));
}

IntegerPartition ProjectPrevalence(const std::vector<int64_t>& input) {
  IsotonicFit fit = IsotonicL1(input);
  PrevalenceVector prevalence;
  prevalence.values = std::move(fit.values);
  return Conjugate(prevalence);
}

IntegerPartition TrimToSize(const IntegerPartition& p, int64_t max_size) {
  if (max_size < 0) throw PreconditionError("size cap must be nonnegative");
  if (p.size() <= max_size) return p;
  std::vector<int64_t> parts = p.parts();
  int64_t excess = p.size() - max_size;
  while (excess > 0) {
    const int64_t take = std::min(excess, parts.back());
    parts.back() -= take;
    excess -= take;
    if (parts.back() == 0) parts.pop_back();
  }
  return IntegerPartition::FromParts(std::move(parts));
}

}  // namespace anonhist
