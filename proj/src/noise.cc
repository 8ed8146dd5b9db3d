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

#include "anonhist/noise.h"

#include <cmath>
#include <cstdlib>

#include "anonhist/errors.h"

namespace anonhist {

PrivacyBudget::PrivacyBudget(double epsilon, double delta)
    : epsilon(epsilon), delta(delta) {
  if (!(epsilon > 0) || !std::isfinite(epsilon)) {
    throw PreconditionError("epsilon must be positive and finite");
  }
  if (!(delta >= 0 && delta < 1)) {
    throw PreconditionError("delta must be in [0, 1)");
  }
}

PrivacyBudget GroupPrivacy(const PrivacyBudget& budget, int64_t group_size) {
  if (group_size < 1) throw PreconditionError("group size must be positive");
  const double k = static_cast<double>(group_size);
  const double grown_epsilon = k * budget.epsilon;
  double grown_delta = 0.0;
  if (budget.delta > 0) {
    grown_delta =
        budget.delta * std::expm1(grown_epsilon) / std::expm1(budget.epsilon);
  }
  if (!(grown_delta < 1)) {
    throw PreconditionError("group privacy budget degenerates (delta >= 1)");
  }
  return PrivacyBudget(grown_epsilon, grown_delta);
}

SeededStream::SeededStream(uint64_t seed, uint64_t stream_index) {
  uint64_t state = seed + stream_index * 0x9E3779B97F4A7C15ULL;
  state = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9ULL;
  state = (state ^ (state >> 27)) * 0x94D049BB133111EBULL;
  state ^= state >> 31;
  engine_.seed(state);
}

GeometricNoise::GeometricNoise(double alpha) : alpha_(alpha) {
  if (!(alpha > 0 && alpha < 1)) {
    throw PreconditionError("alpha must be in (0, 1)");
  }
}

double GeometricNoise::Pmf(int64_t value) const {
  const double mass_at_zero = (1.0 - alpha_) / (1.0 + alpha_);
  return std::pow(alpha_, static_cast<double>(std::abs(value))) * mass_at_zero;
}

double GeometricNoise::UpperTail(int64_t threshold) const {
  if (threshold < 1) throw PreconditionError("tail threshold must be >= 1");
  return std::pow(alpha_, static_cast<double>(threshold)) / (1.0 + alpha_);
}

double GeometricNoise::ExpectedAbs() const {
  return 2.0 * alpha_ / (1.0 - alpha_ * alpha_);
}

int64_t GeometricNoise::Sample(RandomStream& stream) const {
  const uint64_t word = stream.NextWord();
  const double u = static_cast<double>(word >> 11) * 0x1.0p-53;
  const double cut = (1.0 + alpha_) * (1.0 - u) / 2.0;
  int64_t magnitude = 0;
  double power = alpha_;
  while (power >= cut) {
    power *= alpha_;
    ++magnitude;
  }
  if (magnitude == 0) return 0;
  return (word & 1) ? -magnitude : magnitude;
}

NoisedIntVector AddGeoNoise(const std::vector<int64_t>& values,
                            const GeometricNoise& noise,
                            RandomStream& stream) {
  NoisedIntVector noised;
  noised.values.reserve(values.size());
  for (int64_t v : values) {
    noised.values.push_back(v + noise.Sample(stream));
  }
  return noised;
}

}  // namespace anonhist
