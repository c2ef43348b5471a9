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

// Codec between precomposed Hangul syllables (U+AC00..U+D7A3) and their
// onset/nucleus/coda jamos, plus segmentation of text into syllable and
// non-syllable units.
//
// Jamo indices follow the Unicode composition arithmetic:
//   syllable = 0xAC00 + (onset * 21 + nucleus) * 28 + coda
// with onset in [0, 19), nucleus in [0, 21) and coda in [0, 28), where
// coda 0 means "no final consonant". Jamos are displayed with the
// compatibility block characters (U+3131..U+3163), e.g. ㄱ, ㅣ.

#ifndef PHISH_HANGUL_H_
#define PHISH_HANGUL_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace phish {

enum class JamoPosition : std::uint8_t { kOnset = 0, kNucleus = 1, kCoda = 2 };

inline constexpr std::array<JamoPosition, 3> kJamoPositions = {
    JamoPosition::kOnset, JamoPosition::kNucleus, JamoPosition::kCoda};

inline constexpr int kOnsetCount = 19;
inline constexpr int kNucleusCount = 21;
// Includes index 0, the absent coda.
inline constexpr int kCodaCount = 28;

inline constexpr char32_t kSyllableBase = 0xAC00;
inline constexpr int kSyllableCount = kOnsetCount * kNucleusCount * kCodaCount;
inline constexpr char32_t kSyllableLast = kSyllableBase + kSyllableCount - 1;

// Number of index values for `position` (coda includes "absent").
int IndexCount(JamoPosition position);

std::string_view PositionName(JamoPosition position);
std::optional<JamoPosition> ParsePosition(std::string_view name);

struct Jamo {
  JamoPosition position = JamoPosition::kOnset;
  int index = 0;

  static constexpr Jamo Onset(int i) { return {JamoPosition::kOnset, i}; }
  static constexpr Jamo Nucleus(int i) { return {JamoPosition::kNucleus, i}; }
  static constexpr Jamo Coda(int i) { return {JamoPosition::kCoda, i}; }
  static constexpr Jamo AbsentCoda() { return {JamoPosition::kCoda, 0}; }

  // Maps a compatibility jamo character to the jamo it denotes at
  // `position`; nullopt if the character is not a jamo of that position.
  static std::optional<Jamo> FromDisplayChar(JamoPosition position,
                                             char32_t c);

  bool IsAbsent() const {
    return position == JamoPosition::kCoda && index == 0;
  }
  bool IsValid() const;

  // Compatibility jamo character; U+0000 for the absent coda.
  char32_t DisplayChar() const;
  // UTF-8 of DisplayChar(); empty for the absent coda.
  std::string ToString() const;

  friend auto operator<=>(const Jamo&, const Jamo&) = default;
};

struct Syllable {
  Jamo onset;
  Jamo nucleus;
  Jamo coda = Jamo::AbsentCoda();

  static Syllable FromIndices(int onset, int nucleus, int coda = 0) {
    return {Jamo::Onset(onset), Jamo::Nucleus(nucleus), Jamo::Coda(coda)};
  }

  const Jamo& at(JamoPosition position) const;
  Jamo& at(JamoPosition position);

  // Onset and nucleus, then the coda if present.
  std::vector<Jamo> PresentJamos() const;

  bool IsValid() const {
    return onset.position == JamoPosition::kOnset && onset.IsValid() &&
           nucleus.position == JamoPosition::kNucleus && nucleus.IsValid() &&
           coda.position == JamoPosition::kCoda && coda.IsValid();
  }

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

bool IsPrecomposedSyllable(char32_t c);

// Total: returns nullopt for anything that is not a precomposed syllable.
std::optional<Syllable> Decompose(char32_t c);

// Throws std::invalid_argument if any jamo is out of range or misplaced.
char32_t Compose(const Syllable& syllable);

// One character of segmented text. Non-syllable units keep their exact
// source bytes, including ill-formed UTF-8, so reserialization is lossless.
struct TextUnit {
  std::variant<Syllable, std::string> value;

  static TextUnit FromSyllable(const Syllable& s) { return {s}; }
  static TextUnit FromOther(std::string bytes) { return {std::move(bytes)}; }

  bool IsSyllable() const { return std::holds_alternative<Syllable>(value); }
  const Syllable& syllable() const { return std::get<Syllable>(value); }
  Syllable& syllable() { return std::get<Syllable>(value); }
  const std::string& other() const { return std::get<std::string>(value); }

  std::string ToString() const;

  friend bool operator==(const TextUnit&, const TextUnit&) = default;
};

// Canonical composition restricted to Hangul: leading+vowel conjoining jamo
// pairs become LV syllables and an LV syllable followed by a trailing jamo
// becomes an LVT syllable. Everything else is copied unchanged.
std::string ComposeHangul(std::string_view text);

// Composes (see ComposeHangul) and splits into one unit per character.
std::vector<TextUnit> Segment(std::string_view text);

std::string Serialize(std::span<const TextUnit> units);

}  // namespace phish

#endif  // PHISH_HANGUL_H_
