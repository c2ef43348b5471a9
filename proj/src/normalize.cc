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

#include "phish/normalize.h"

#include "embedded_tables.h"
#include "phish/io.h"

namespace phish {
namespace {

std::string_view StripSlashes(std::string_view phone) {
  if (phone.size() >= 2 && phone.front() == '/' && phone.back() == '/') {
    phone = phone.substr(1, phone.size() - 2);
  }
  return phone;
}

}  // namespace

CanonicalText Canonicalize(std::string_view text, const LookupTable& table) {
  std::vector<TextUnit> units = Segment(text);
  for (TextUnit& unit : units) {
    if (!unit.IsSyllable()) continue;
    Syllable& s = unit.syllable();
    s.onset = table.Canonical(s.onset);
    s.nucleus = table.Canonical(s.nucleus);
    s.coda = table.Canonical(s.coda);
  }
  return {Serialize(units)};
}

std::string_view DefaultIpaTableText() { return internal::kIpaFallbackText; }

IpaTable IpaTable::Parse(std::string_view contents) {
  IpaTable table;
  std::array<bool, kJamoSlotCount> seen{};
  ParseJamoTable(contents, [&](int line, JamoPosition, std::string phone,
                               std::vector<Jamo> members) {
    const std::string_view bare = StripSlashes(phone);
    if (bare.empty()) throw TableError(line, "empty phone");
    for (const Jamo& j : members) {
      const int slot = JamoSlot(j);
      if (seen[slot]) {
        throw TableError(line, j.ToString() + " is listed twice");
      }
      seen[slot] = true;
      table.phones_[slot] = std::string(bare);
    }
  });
  for (JamoPosition position : kJamoPositions) {
    const int first = position == JamoPosition::kCoda ? 1 : 0;
    for (int i = first; i < IndexCount(position); ++i) {
      const Jamo j{position, i};
      if (!seen[JamoSlot(j)]) {
        throw TableError(0, "no phone for " +
                                std::string(PositionName(position)) + " " +
                                j.ToString());
      }
    }
  }
  return table;
}

IpaTable IpaTable::Load(const std::filesystem::path& path) {
  return Parse(ReadTextFile(path));
}

const IpaTable& IpaTable::Default() {
  static const IpaTable table = Parse(DefaultIpaTableText());
  return table;
}

std::string_view IpaTable::Phone(Jamo j) const {
  if (!j.IsValid()) return {};
  return phones_[JamoSlot(j)];
}

std::string PhoneSequence::Render() const {
  std::string out;
  for (const std::string& phone : phones) {
    if (phone == kBoundary || phone == kSilent) continue;
    out += phone;
  }
  return out;
}

PhoneSequence Transcribe(std::string_view text, const LookupTable& table,
                         const IpaTable& ipa) {
  PhoneSequence sequence;
  bool previous_was_syllable = false;
  for (const TextUnit& unit : Segment(text)) {
    if (!unit.IsSyllable()) {
      sequence.phones.push_back(unit.other());
      previous_was_syllable = false;
      continue;
    }
    if (previous_was_syllable) {
      sequence.phones.emplace_back(PhoneSequence::kBoundary);
    }
    for (const Jamo& j : unit.syllable().PresentJamos()) {
      const std::string_view base = StripSlashes(table.BasePhone(j));
      sequence.phones.emplace_back(base.empty() ? ipa.Phone(j) : base);
    }
    previous_was_syllable = true;
  }
  return sequence;
}

}  // namespace phish
