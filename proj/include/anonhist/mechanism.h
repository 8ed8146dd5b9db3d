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

#ifndef ANONHIST_MECHANISM_H_
#define ANONHIST_MECHANISM_H_

#include <cstdint>
#include <optional>

#include "anonhist/noise.h"
#include "anonhist/partition.h"

namespace anonhist {

enum class MechanismKind {
  // Rank-split release for inputs with a known size bound.
  kAlg1,
  // Wrapper that privately estimates the size first; needs epsilon >= 2.
  kAlg2,
  // Naive comparison point: noise every rank up to the size bound.
  kBaseline,
};

// Everything needed to reproduce a release run.
struct ReleaseConfig {
  double epsilon = 1.0;
  // Public upper bound on the input size. Required for kAlg1/kBaseline and
  // must be absent for kAlg2 (which estimates it privately).
  std::optional<int64_t> size_bound;
  MechanismKind kind = MechanismKind::kAlg1;
  uint64_t seed = 0;
};

// Throws PreconditionError when the config is internally inconsistent.
void ValidateConfig(const ReleaseConfig& config);

// True for configs that run in a weaker-accuracy regime (kAlg1 with
// epsilon < 1). The release still runs and stays private; the error scale is
// just larger than the calibrated regime assumes. Callers decide whether to
// surface a warning.
bool HasLowEpsilonCaveat(const ReleaseConfig& config);

// Exact integer square roots (no floating-point rounding at boundaries).
int64_t FloorSqrt(int64_t value);
int64_t CeilSqrt(int64_t value);

// The pre-noise view of an input: the counts above the split rank, plus the
// prevalences of the counts below it. With m = CeilSqrt(size_bound), moving
// one unit in the input moves this pair by at most 1 in L1, which is what
// makes a single unit of noise per coordinate sufficient.
struct SensitivityMapImage {
  std::vector<int64_t> head;            // counts at ranks 1..m, zero-padded
  std::vector<int64_t> low_prevalence;  // prevalences of the tail, thresholds 1..m
};

// Requires 1 <= size_bound and p.size() <= size_bound.
SensitivityMapImage SensitivityMap(const IntegerPartition& p,
                                   int64_t size_bound);

// epsilon-private release of p under a public size bound. Adds one
// two-sided geometric draw (alpha = e^-epsilon) to each head coordinate
// (ranks 1..m, in rank order), then to each prevalence coordinate
// (thresholds 1..m, in threshold order), projects both back to histograms,
// and returns the multiset union. Consumes exactly 2m words from the stream.
// Requires epsilon > 0 and p.size() <= size_bound.
IntegerPartition DpAnonHist(const IntegerPartition& p, double epsilon,
                            int64_t size_bound, RandomStream& stream);

// epsilon-private release without a size bound, for epsilon >= 2. Spends a
// unit of budget on a noisy size estimate (one Geo(1/e) draw), doubles it to
// get a working bound n', runs the bounded release at epsilon - 1 with the
// rank window of n' (the input is used as-is even if its size exceeds n';
// the per-unit sensitivity argument does not depend on the bound), and trims
// the result to size n'. Consumes 1 + 2*CeilSqrt(n') words.
IntegerPartition DpAnonHistUnknownN(const IntegerPartition& p, double epsilon,
                                    RandomStream& stream);

// Comparison baseline: noises the counts at every rank 1..size_bound and
// projects once. Same per-coordinate noise as DpAnonHist but size_bound
// coordinates instead of 2*CeilSqrt(size_bound).
IntegerPartition BaselineNoiseAll(const IntegerPartition& p, double epsilon,
                                  int64_t size_bound, RandomStream& stream);

// Runs the configured mechanism with the stream SeededStream(config.seed,
// stream_index). Deterministic in (config, input, stream_index).
IntegerPartition Release(const ReleaseConfig& config,
                         const IntegerPartition& input,
                         uint64_t stream_index = 0);

}  // namespace anonhist

#endif  // ANONHIST_MECHANISM_H_
