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

#include "ddeg/rng.hpp"

#include <atomic>
#include <stdexcept>

#include "ddeg/parallel.hpp"

namespace ddeg {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

std::atomic<unsigned> g_threads{1};

}  // namespace

Rng::Rng(std::uint64_t key) : key_(key) {
  std::uint64_t x = key;
  for (auto& word : s_) {
    x += 0x9E3779B97F4A7C15ULL;
    word = splitmix64(x);
  }
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be > 0");
  // Lemire's multiply-shift with rejection.
  while (true) {
    const unsigned __int128 m =
        static_cast<unsigned __int128>(next()) * static_cast<unsigned __int128>(bound);
    const auto low = static_cast<std::uint64_t>(m);
    if (low >= bound || low >= (-bound) % bound) {
      return static_cast<std::uint64_t>(m >> 64);
    }
  }
}

Rng Rng::substream(std::uint64_t index) const {
  return Rng(splitmix64(key_ ^ splitmix64(index + 0xD1B54A32D192ED03ULL)));
}

ScriptedSource::ScriptedSource(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("ScriptedSource needs at least one value");
  }
  for (double v : values_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("ScriptedSource values must lie in [0, 1]");
    }
  }
}

double ScriptedSource::uniform() {
  return values_[consumed_++ % values_.size()];
}

unsigned default_threads() { return g_threads.load(); }

void set_default_threads(unsigned threads) {
  g_threads.store(threads == 0 ? 1 : threads);
}

}  // namespace ddeg
