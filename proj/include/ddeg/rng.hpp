// Copyright 2026 The ddeg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DDEG_RNG_HPP_
#define DDEG_RNG_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace ddeg {

// SplitMix64 finaliser (Steele, Lea, Flood 2014). Used for seeding and for
// deriving substream keys.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Source of uniform draws on [0, 1]. Samplers take this interface so tests
// can script the draws.
// Independent child seed for a labelled sub-computation.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  return splitmix64(seed ^ splitmix64(salt + 0x9E3779B97F4A7C15ULL));
}

class UniformSource {
 public:
  virtual ~UniformSource() = default;
  virtual double uniform() = 0;
};

// xoshiro256** seeded through SplitMix64. Output is fully determined by
// the 64-bit key on every platform: no std:: distributions are involved.
//
// Stream-split discipline: substream(i) derives an independent generator
// from (key, i) without touching this generator's state, so concurrent
// workers each take their own substream and results do not depend on
// scheduling.
class Rng final : public UniformSource {
 public:
  explicit Rng(std::uint64_t key);

  std::uint64_t key() const { return key_; }
  std::uint64_t next();
  // 53-bit uniform on [0, 1).
  double uniform() override;
  // Uniform integer on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  Rng substream(std::uint64_t index) const;

 private:
  std::uint64_t key_;
  std::uint64_t s_[4];
};

// Replays a fixed list of values, cycling when exhausted.
class ScriptedSource final : public UniformSource {
 public:
  explicit ScriptedSource(std::vector<double> values);
  double uniform() override;
  std::size_t consumed() const { return consumed_; }

 private:
  std::vector<double> values_;
  std::size_t consumed_ = 0;
};

}  // namespace ddeg

#endif  // DDEG_RNG_HPP_
