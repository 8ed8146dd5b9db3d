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

#ifndef ANONHIST_NOISE_H_
#define ANONHIST_NOISE_H_

#include <cstdint>
#include <random>
#include <vector>

#include "anonhist/partition.h"

namespace anonhist {

// An (epsilon, delta) privacy guarantee. Requires epsilon > 0 and
// 0 <= delta < 1.
struct PrivacyBudget {
  PrivacyBudget(double epsilon, double delta);

  double epsilon;
  double delta;
};

// The budget obtained when a guarantee stated for inputs at distance 1 is
// applied to inputs at distance `group_size`:
//   epsilon' = group_size * epsilon
//   delta'   = delta * (e^{epsilon'} - 1) / (e^{epsilon} - 1).
// Rejects group_size < 1 and results whose delta' reaches 1 (the guarantee
// would be vacuous and no longer representable as a PrivacyBudget).
PrivacyBudget GroupPrivacy(const PrivacyBudget& budget, int64_t group_size);

// A source of 64-bit words. Exactly one word is consumed per noise sample,
// which is part of the external contract: callers can line up draws with
// coordinates, and tests can substitute a stub stream.
class RandomStream {
 public:
  virtual ~RandomStream() = default;
  virtual uint64_t NextWord() = 0;
};

// The deterministic stream used for all seeded runs. The mapping from
// (seed, stream_index) to the word sequence is fixed and documented:
//
//   state  = seed + stream_index * 0x9E3779B97F4A7C15   (mod 2^64)
//   state ^= state >> 30;  state *= 0xBF58476D1CE4E5B9
//   state ^= state >> 27;  state *= 0x94D049BB133111EB
//   state ^= state >> 31                                 (SplitMix64 finalizer)
//   words  = std::mt19937_64 seeded with state
//
// std::mt19937_64's output sequence for a given seed is fully specified by
// the C++ standard, so identical (seed, stream_index) gives identical words
// on every platform. Distinct stream_index values give independent-looking
// streams for per-trial noise.
class SeededStream final : public RandomStream {
 public:
  SeededStream(uint64_t seed, uint64_t stream_index);

  uint64_t NextWord() override { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Test stub: emits the same word forever. Word 0 makes every geometric draw
// come out 0, which turns any mechanism into its noise-free skeleton.
class ConstantStream final : public RandomStream {
 public:
  explicit ConstantStream(uint64_t word = 0) : word_(word) {}

  uint64_t NextWord() override { return word_; }

 private:
  uint64_t word_;
};

// The two-sided geometric distribution on the integers with decay alpha in
// (0, 1):
//   Pr[X = i]  = alpha^{|i|} * (1 - alpha) / (1 + alpha)
//   Pr[X >= k] = alpha^k / (1 + alpha)               for k >= 1 (symmetric).
// Callers that want a target privacy level pick alpha = e^{-epsilon}
// themselves; this class is a pure distribution.
class GeometricNoise {
 public:
  explicit GeometricNoise(double alpha);

  double alpha() const { return alpha_; }

  double Pmf(int64_t value) const;

  // Pr[X >= threshold] for threshold >= 1. By symmetry this also equals
  // Pr[X <= -threshold].
  double UpperTail(int64_t threshold) const;

  // E|X| = 2 * alpha / (1 - alpha^2).
  double ExpectedAbs() const;

  // Draws one sample, consuming exactly one word from the stream. The word
  // is split into a magnitude part and a sign part:
  //   u    = (word >> 11) * 2^-53        53-bit uniform in [0, 1)
  //   cut  = (1 + alpha) * (1 - u) / 2
  //   |X|  = smallest k >= 0 with alpha^{k+1} < cut   (inverse magnitude CDF)
  //   sign = bit 0 of the word (set means negative), applied only when
  //          |X| > 0.
  // The magnitude walk uses only IEEE multiplications and comparisons, so the
  // (word -> sample) map is identical across platforms. Word 0 maps to 0.
  int64_t Sample(RandomStream& stream) const;

 private:
  double alpha_;
};

// Adds one independent sample to every coordinate, consuming words in
// coordinate order (one word per coordinate).
NoisedIntVector AddGeoNoise(const std::vector<int64_t>& values,
                            const GeometricNoise& noise, RandomStream& stream);

}  // namespace anonhist

#endif  // ANONHIST_NOISE_H_
