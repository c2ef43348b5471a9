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

// Defense-side text normalization.
//
// Canonicalize() folds every jamo onto the representative of its
// substitution set, undoing substitutions that stay inside one set.
// Transcribe() is a simplified per-jamo pronunciation: set members read as
// the set's base phone, other jamos use a fixed IPA table, and codas are
// neutralized. No cross-syllable sound changes are modeled.

#ifndef PHISH_NORMALIZE_H_
#define PHISH_NORMALIZE_H_

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "phish/hangul.h"
#include "phish/lookup.h"

namespace phish {

struct CanonicalText {
  std::string text;

  friend bool operator==(const CanonicalText&, const CanonicalText&) = default;
};

CanonicalText Canonicalize(std::string_view text,
                           const LookupTable& table = LookupTable::Default());

// Complete jamo -> IPA table for the transcriber. Same file layout as the
// lookup table; every modern jamo must appear exactly once.
class IpaTable {
 public:
  static IpaTable Parse(std::string_view contents);
  static IpaTable Load(const std::filesystem::path& path);
  static const IpaTable& Default();

  // Without slashes, e.g. "k". Empty for the absent coda.
  std::string_view Phone(Jamo j) const;

 private:
  std::array<std::string, kJamoSlotCount> phones_;
};

std::string_view DefaultIpaTableText();

struct PhoneSequence {
  // Between two adjacent syllables.
  static constexpr std::string_view kBoundary = ".";
  // Phone of the silent initial ㅇ.
  static constexpr std::string_view kSilent = "∅";

  std::vector<std::string> phones;

  // Phones joined into a string for tokenization: boundaries and silent
  // onsets are dropped, pass-through characters are kept verbatim.
  std::string Render() const;

  friend bool operator==(const PhoneSequence&, const PhoneSequence&) = default;
};

PhoneSequence Transcribe(std::string_view text,
                         const LookupTable& table = LookupTable::Default(),
                         const IpaTable& ipa = IpaTable::Default());

}  // namespace phish

#endif  // PHISH_NORMALIZE_H_
