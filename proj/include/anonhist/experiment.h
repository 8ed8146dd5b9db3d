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

#ifndef ANONHIST_EXPERIMENT_H_
#define ANONHIST_EXPERIMENT_H_

#include <cstdint>
#include <string>

#include "anonhist/mechanism.h"
#include "anonhist/partition.h"

namespace anonhist {

// Aggregated error of repeated releases of one input.
struct ExperimentReport {
  std::string mechanism_kind;
  // The configured size bound, or the input size when the mechanism takes
  // none.
  int64_t n = 0;
  double epsilon = 0.0;
  int64_t trials = 0;
  double mean_error = 0.0;
  // Sample standard deviation over trials (0 for a single trial).
  double std_error = 0.0;
  int64_t max_error = 0;
  uint64_t seed = 0;
  // Wall time of the whole run. Reported out of band (stderr) by the CLI so
  // that the canonical JSON report stays byte-identical across reruns.
  int64_t wall_time_ms = 0;
};

// Canonical test inputs of size <= n.
enum class ShapeKind {
  kStaircase,  // (k, k-1, ..., 1) for the largest k with k(k+1)/2 <= n
  kFlat,       // n parts of 1
  kBlock,      // a single part of n
};

IntegerPartition MakeShapeInput(ShapeKind shape, int64_t n);

const char* MechanismKindName(MechanismKind kind);

// Releases `input` `trials` times (trial t uses stream index t) and
// aggregates the L1 error against the input. Deterministic in
// (config, input, trials) except for wall_time_ms.
ExperimentReport RunErrorExperiment(const ReleaseConfig& config,
                                    const IntegerPartition& input,
                                    int64_t trials);

}  // namespace anonhist

#endif  // ANONHIST_EXPERIMENT_H_
