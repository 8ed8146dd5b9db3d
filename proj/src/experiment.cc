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

#include "anonhist/experiment.h"

#include <chrono>
#include <cmath>
#include <vector>

#include "anonhist/errors.h"
#include "anonhist/noise.h"

namespace anonhist {

IntegerPartition MakeShapeInput(ShapeKind shape, int64_t n) {
  if (n < 1) {
    throw PreconditionError("shape input size must be positive");
  }
  std::vector<int64_t> parts;
  switch (shape) {
    case ShapeKind::kStaircase: {
      int64_t k = 0;
      while ((k + 1) * (k + 2) / 2 <= n) ++k;
      for (int64_t part = k; part >= 1; --part) parts.push_back(part);
      break;
    }
    case ShapeKind::kFlat:
      parts.assign(static_cast<size_t>(n), 1);
      break;
    case ShapeKind::kBlock:
      parts.push_back(n);
      break;
  }
  return IntegerPartition::FromParts(parts);
}

const char* MechanismKindName(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kAlg1:
      return "alg1";
    case MechanismKind::kAlg2:
      return "alg2";
    case MechanismKind::kBaseline:
      return "baseline";
  }
  throw PreconditionError("unknown mechanism kind");
}

ExperimentReport RunErrorExperiment(const ReleaseConfig& config,
                                    const IntegerPartition& input,
                                    int64_t trials) {
  if (trials < 1) {
    throw PreconditionError("experiment needs at least one trial");
  }
  ValidateConfig(config);

  const auto start = std::chrono::steady_clock::now();
  double sum = 0.0;
  double sum_sq = 0.0;
  int64_t max_error = 0;
  for (int64_t t = 0; t < trials; ++t) {
    const IntegerPartition released =
        Release(config, input, static_cast<uint64_t>(t));
    const int64_t error = L1Distance(input, released);
    sum += static_cast<double>(error);
    sum_sq += static_cast<double>(error) * static_cast<double>(error);
    if (error > max_error) max_error = error;
  }
  const auto stop = std::chrono::steady_clock::now();

  ExperimentReport report;
  report.mechanism_kind = MechanismKindName(config.kind);
  report.n = config.size_bound.value_or(input.size());
  report.epsilon = config.epsilon;
  report.trials = trials;
  report.mean_error = sum / static_cast<double>(trials);
  if (trials > 1) {
    const double mean = report.mean_error;
    double variance =
        (sum_sq - static_cast<double>(trials) * mean * mean) /
        static_cast<double>(trials - 1);
    if (variance < 0.0) variance = 0.0;
    report.std_error = std::sqrt(variance);
  }
  report.max_error = max_error;
  report.seed = config.seed;
  report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
          .count();
  return report;
}

}  // namespace anonhist
