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

#include "phish/hangul.h"

#include <stdexcept>
#include <string>

#include "phish/utf8.h"

namespace phish {
namespace {

constexpr std::array<char32_t, kOnsetCount> kOnsetChars = {
    U'ㄱ', U'ㄲ', U'ㄴ', U'ㄷ', U'ㄸ', U'ㄹ', U'ㅁ', U'ㅂ', U'ㅃ', U'ㅅ',
    U'ㅆ', U'ㅇ', U'ㅈ', U'ㅉ', U'ㅊ', U'ㅋ', U'ㅌ', U'ㅍ', U'ㅎ'};

constexpr std::array<char32_t, kNucleusCount> kNucleusChars = {
    U'ㅏ', U'ㅐ', U'ㅑ', U'ㅒ', U'ㅓ', U'ㅔ', U'ㅕ', U'ㅖ', U'ㅗ', U'ㅘ', U'ㅙ',
    U'ㅚ', U'ㅛ', U'ㅜ', U'ㅝ', U'ㅞ', U'ㅟ', U'ㅠ', U'ㅡ', U'ㅢ', U'ㅣ'};

// Index 0 is the absent coda.
constexpr std::array<char32_t, kCodaCount> kCodaChars = {
    U'\0', U'ㄱ', U'ㄲ', U'ㄳ', U'ㄴ', U'ㄵ', U'ㄶ', U'ㄷ', U'ㄹ', U'ㄺ',
    U'ㄻ', U'ㄼ', U'ㄽ', U'ㄾ', U'ㄿ', U'ㅀ', U'ㅁ', U'ㅂ', U'ㅄ', U'ㅅ',
    U'ㅆ', U'ㅇ', U'ㅈ', U'ㅊ', U'ㅋ', U'ㅌ', U'ㅍ', U'ㅎ'};

// Conjoining jamo blocks used by canonical composition.
constexpr char32_t kLeadingBase = 0x1100;
constexpr char32_t kVowelBase = 0x1161;
// One below the first trailing consonant (U+11A8), matching coda index 0.
constexpr char32_t kTrailingBase = 0x11A7;

std::span<const char32_t> DisplayTable(JamoPosition position) {
  switch (position) {
    case JamoPosition::kOnset:
      return kOnsetChars;
    case JamoPosition::kNucleus:
      return kNucleusChars;
    case JamoPosition::kCoda:
      return kCodaChars;
  }
  return {};
}

bool IsLeading(char32_t c) {
  return c >= kLeadingBase && c < kLeadingBase + kOnsetCount;
}
bool IsVowel(char32_t c) {
  return c >= kVowelBase && c < kVowelBase + kNucleusCount;
}
bool IsTrailing(char32_t c) {
  return c > kTrailingBase && c < kTrailingBase + kCodaCount;
}

}  // namespace

int IndexCount(JamoPosition position) {
  return static_cast<int>(DisplayTable(position).size());
}

std::string_view PositionName(JamoPosition position) {
  switch (position) {
    case JamoPosition::kOnset:
      return "onset";
    case JamoPosition::kNucleus:
      return "nucleus";
    case JamoPosition::kCoda:
      return "coda";
  }
  return "";
}

std::optional<JamoPosition> ParsePosition(std::string_view name) {
  for (JamoPosition p : kJamoPositions) {
    if (PositionName(p) == name) return p;
  }
  return std::nullopt;
}

std::optional<Jamo> Jamo::FromDisplayChar(JamoPosition position, char32_t c) {
  if (c == U'\0') return std::nullopt;
  const auto table = DisplayTable(position);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == c) return Jamo{position, static_cast<int>(i)};
  }
  return std::nullopt;
}

bool Jamo::IsValid() const {
  return index >= 0 && index < IndexCount(position);
}

char32_t Jamo::DisplayChar() const {
  if (!IsValid()) throw std::invalid_argument("jamo index out of range");
  return DisplayTable(position)[index];
}

std::string Jamo::ToString() const {
  if (IsAbsent()) return {};
  return utf8::Encode(DisplayChar());
}

const Jamo& Syllable::at(JamoPosition position) const {
  switch (position) {
    case JamoPosition::kOnset:
      return onset;
    case JamoPosition::kNucleus:
      return nucleus;
    case JamoPosition::kCoda:
      return coda;
  }
  throw std::invalid_argument("bad jamo position");
}

Jamo& Syllable::at(JamoPosition position) {
  return const_cast<Jamo&>(std::as_const(*this).at(position));
}

std::vector<Jamo> Syllable::PresentJamos() const {
  std::vector<Jamo> jamos = {onset, nucleus};
  if (!coda.IsAbsent()) jamos.push_back(coda);
  return jamos;
}

bool IsPrecomposedSyllable(char32_t c) {
  return c >= kSyllableBase && c <= kSyllableLast;
}

std::optional<Syllable> Decompose(char32_t c) {
  if (!IsPrecomposedSyllable(c)) return std::nullopt;
  const int offset = static_cast<int>(c - kSyllableBase);
  return Syllable::FromIndices(offset / (kNucleusCount * kCodaCount),
                               (offset / kCodaCount) % kNucleusCount,
                               offset % kCodaCount);
}

char32_t Compose(const Syllable& syllable) {
  if (!syllable.IsValid()) {
    throw std::invalid_argument("syllable has an out-of-range jamo");
  }
  return kSyllableBase +
         static_cast<char32_t>(
             (syllable.onset.index * kNucleusCount + syllable.nucleus.index) *
                 kCodaCount +
             syllable.coda.index);
}

std::string TextUnit::ToString() const {
  if (IsSyllable()) return utf8::Encode(Compose(syllable()));
  return other();
}

std::string ComposeHangul(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    const utf8::DecodedChar first = utf8::DecodeAt(text, pos);
    if (!first.valid) {
      out.append(text.substr(pos, first.length));
      pos += first.length;
      continue;
    }
    std::size_t next = pos + first.length;
    std::optional<Syllable> syllable;
    if (IsLeading(first.code_point) && next < text.size()) {
      const utf8::DecodedChar vowel = utf8::DecodeAt(text, next);
      if (vowel.valid && IsVowel(vowel.code_point)) {
        syllable = Syllable::FromIndices(
            static_cast<int>(first.code_point - kLeadingBase),
            static_cast<int>(vowel.code_point - kVowelBase));
        next += vowel.length;
      }
    } else if (auto s = Decompose(first.code_point); s && s->coda.IsAbsent()) {
      syllable = s;
    }
    if (!syllable) {
      out.append(text.substr(pos, first.length));
      pos = next;
      continue;
    }
    if (next < text.size()) {
      const utf8::DecodedChar trail = utf8::DecodeAt(text, next);
      if (trail.valid && IsTrailing(trail.code_point)) {
        syllable->coda =
            Jamo::Coda(static_cast<int>(trail.code_point - kTrailingBase));
        next += trail.length;
      }
    }
    utf8::Append(Compose(*syllable), out);
    pos = next;
  }
  return out;
}

std::vector<TextUnit> Segment(std::string_view text) {
  const std::string composed = ComposeHangul(text);
  std::vector<TextUnit> units;
  units.reserve(composed.size() / 2);
  for (std::size_t pos = 0; pos < composed.size();) {
    const utf8::DecodedChar d = utf8::DecodeAt(composed, pos);
    if (auto s = d.valid ? Decompose(d.code_point) : std::nullopt) {
      units.push_back(TextUnit::FromSyllable(*s));
    } else {
      units.push_back(TextUnit::FromOther(composed.substr(pos, d.length)));
    }
    pos += d.length;
  }
  return units;
}

std::string Serialize(std::span<const TextUnit> units) {
  std::string out;
  for (const TextUnit& unit : units) out += unit.ToString();
  return out;
}

}  // namespace phish
