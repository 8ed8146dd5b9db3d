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

#include "anonhist/mechanism.h"

#include <algorithm>
#include <cmath>

#include "anonhist/errors.h"
#include "anonhist/projection.h"

namespace anonhist {

namespace {

constexpr int64_t kMaxExactSqrt = 3037000499;  // floor(sqrt(2^63 - 1))

GeometricNoise NoiseForEpsilon(double epsilon) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw PreconditionError("epsilon must be positive and finite");
  }
  const double alpha = std::exp(-epsilon);
  if (!(alpha > 0)) {
    throw PreconditionError("epsilon too large: noise scale underflows");
  }
  return GeometricNoise(alpha);
}

SensitivityMapImage MapAtWindow(const IntegerPartition& p, int64_t window) {
  RankSplit split = SplitAtRank(p, window);
  SensitivityMapImage image;
  image.head = std::move(split.head);
  image.low_prevalence = Prevalence(split.tail, window).values;
  return image;
}

// The bounded release without the size check, shared with the unknown-size
// wrapper (which may legitimately run it on inputs larger than the bound).
IntegerPartition ReleaseWindowed(const IntegerPartition& p, double epsilon,
                                 int64_t size_bound, RandomStream& stream) {
  if (size_bound < 1) throw PreconditionError("size bound must be positive");
  const GeometricNoise noise = NoiseForEpsilon(epsilon);
  const int64_t window = CeilSqrt(size_bound);
  SensitivityMapImage image = MapAtWindow(p, window);
  NoisedIntVector head = AddGeoNoise(image.head, noise, stream);
  NoisedIntVector prevalence = AddGeoNoise(image.low_prevalence, noise, stream);
  return MultisetUnion(ProjectToPartition(head.values),
                       ProjectPrevalence(prevalence.values));
}

}  // namespace

void ValidateConfig(const ReleaseConfig& config) {
  if (!(config.epsilon > 0) || !std::isfinite(config.epsilon)) {
    throw PreconditionError("epsilon must be positive and finite");
  }
  switch (config.kind) {
    case MechanismKind::kAlg1:
    case MechanismKind::kBaseline:
      if (!config.size_bound.has_value()) {
        throw PreconditionError("this mechanism requires a size bound");
      }
      if (*config.size_bound < 1) {
        throw PreconditionError("size bound must be positive");
      }
      break;
    case MechanismKind::kAlg2:
      if (config.size_bound.has_value()) {
        throw PreconditionError(
            "the unknown-size mechanism does not take a size bound");
      }
      if (config.epsilon < 2) {
        throw PreconditionError(
            "the unknown-size mechanism requires epsilon >= 2");
      }
      break;
  }
}

bool HasLowEpsilonCaveat(const ReleaseConfig& config) {
  return config.kind == MechanismKind::kAlg1 && config.epsilon < 1;
}

int64_t FloorSqrt(int64_t value) {
  if (value < 0) throw PreconditionError("square root of a negative value");
  int64_t root = static_cast<int64_t>(std::sqrt(static_cast<double>(value)));
  root = std::min(root, kMaxExactSqrt);
  while (root > 0 && root * root > value) --root;
  while (root < kMaxExactSqrt && (root + 1) * (root + 1) <= value) ++root;
  return root;
}

int64_t CeilSqrt(int64_t value) {
  const int64_t root = FloorSqrt(value);
  return root * root == value ? root : root + 1;
}

SensitivityMapImage SensitivityMap(const IntegerPartition& p,
                                   int64_t size_bound) {
  if (size_bound < 1) throw PreconditionError("size bound must be positive");
  if (p.size() > size_bound) {
    throw PreconditionError("input size exceeds the size bound");
  }
  return MapAtWindow(p, CeilSqrt(size_bound));
}

IntegerPartition DpAnonHist(const IntegerPartition& p, double epsilon,
                            int64_t size_bound, RandomStream& stream) {
  if (size_bound < 1) throw PreconditionError("size bound must be positive");
  if (p.size() > size_bound) {
    throw PreconditionError("input size exceeds the size bound");
  }
  return ReleaseWindowed(p, epsilon, size_bound, stream);
}

IntegerPartition DpAnonHistUnknownN(const IntegerPartition& p, double epsilon,
                                    RandomStream& stream) {
  if (epsilon < 2) {
    throw PreconditionError("the unknown-size mechanism requires epsilon >= 2");
  }
  const GeometricNoise size_noise(std::exp(-1.0));
  const int64_t noisy_size = p.size() + size_noise.Sample(stream);
  const int64_t working_bound = 2 * std::max<int64_t>(1, noisy_size);
  IntegerPartition released =
      ReleaseWindowed(p, epsilon - 1, working_bound, stream);
  return TrimToSize(released, working_bound);
}

IntegerPartition BaselineNoiseAll(const IntegerPartition& p, double epsilon,
                                  int64_t size_bound, RandomStream& stream) {
  if (size_bound < 1) throw PreconditionError("size bound must be positive");
  if (p.size() > size_bound) {
    throw PreconditionError("input size exceeds the size bound");
  }
  const GeometricNoise noise = NoiseForEpsilon(epsilon);
  RankSplit split = SplitAtRank(p, size_bound);
  NoisedIntVector noised = AddGeoNoise(split.head, noise, stream);
  return ProjectToPartition(noised.values);
}

IntegerPartition Release(const ReleaseConfig& config,
                         const IntegerPartition& input,
                         uint64_t stream_index) {
  ValidateConfig(config);
  SeededStream stream(config.seed, stream_index);
  switch (config.kind) {
    case MechanismKind::kAlg1:
      return DpAnonHist(input, config.epsilon, *config.size_bound, stream);
    case MechanismKind::kAlg2:
      return DpAnonHistUnknownN(input, config.epsilon, stream);
    case MechanismKind::kBaseline:
      return BaselineNoiseAll(input, config.epsilon, *config.size_bound,
                              stream);
  }
  throw PreconditionError("unknown mechanism kind");
}

}  // namespace anonhist
