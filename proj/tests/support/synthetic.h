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

// Synthetic Korean text for property and acceptance tests.

#ifndef PHISH_TESTS_SUPPORT_SYNTHETIC_H_
#define PHISH_TESTS_SUPPORT_SYNTHETIC_H_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "phish/hangul.h"
#include "phish/utf8.h"

namespace phish_testing {

using Engine = std::mt19937_64;

inline int UniformInt(Engine& engine, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(engine);
}

inline char32_t RandomSyllable(
    Engine& engine,
    const std::function<bool(int, int, int)>& accept = nullptr) {
  for (;;) {
    const int onset = UniformInt(engine, 0, phish::kOnsetCount - 1);
    const int nucleus = UniformInt(engine, 0, phish::kNucleusCount - 1);
    // Half of the syllables are open.
    const int coda = UniformInt(engine, 0, 1) == 0
                         ? 0
                         : UniformInt(engine, 1, phish::kCodaCount - 1);
    if (accept && !accept(onset, nucleus, coda)) continue;
    return phish::kSyllableBase +
           static_cast<char32_t>((onset * phish::kNucleusCount + nucleus) *
                                     phish::kCodaCount +
                                 coda);
  }
}

struct TextShape {
  int min_words = 1;
  int max_words = 6;
  int min_word_syllables = 1;
  int max_word_syllables = 4;
  // Chance in percent that a word is followed by ASCII punctuation.
  int punctuation_percent = 10;
};

// Space-separated words of random syllables, occasionally with ASCII
// punctuation or digits mixed in.
inline std::string RandomText(
    Engine& engine, const TextShape& shape = {},
    const std::function<bool(int, int, int)>& accept = nullptr) {
  static constexpr char kPunctuation[] = ".,!?~1";
  std::string text;
  const int words = UniformInt(engine, shape.min_words, shape.max_words);
  for (int w = 0; w < words; ++w) {
    if (w > 0) text += ' ';
    const int n =
        UniformInt(engine, shape.min_word_syllables, shape.max_word_syllables);
    for (int s = 0; s < n; ++s) {
      phish::utf8::Append(RandomSyllable(engine, accept), text);
    }
    if (UniformInt(engine, 0, 99) < shape.punctuation_percent) {
      text += kPunctuation[UniformInt(engine, 0, sizeof(kPunctuation) - 2)];
    }
  }
  return text;
}

}  // namespace phish_testing

#endif  // PHISH_TESTS_SUPPORT_SYNTHETIC_H_
