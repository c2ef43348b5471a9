// Copyright 2026 The phish Authors
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

// Reproducible random stream used by the attack.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Bounded draws use rejection sampling on the raw 64-bit output
// (not std::uniform_int_distribution, whose algorithm is unspecified), so a
// given seed yields the same draws with every conforming standard library.

#ifndef PHISH_RANDOM_H_
#define PHISH_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace phish {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform integer in [0, bound). `bound` must be positive.
  std::size_t Uniform(std::size_t bound);

  // Fisher-Yates: for i = n-1 down to 1, swap element i with Uniform(i + 1).
  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Uniform(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x);

// Seed of the independent stream for item `index` under a global seed.
std::uint64_t DeriveStreamSeed(std::uint64_t seed, std::uint64_t index);

}  // namespace phish

#endif  // PHISH_RANDOM_H_
