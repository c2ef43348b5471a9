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

// Phonetic substitution table: jamos grouped into sets that share a base
// phone, per syllable position. Any member of a set may stand in for any
// other member of the same set.
//
// Table file format (UTF-8), one set per line, in priority order:
//
//   <position>\t<base phone>\t<member><member>...
//
// where <position> is onset, nucleus or coda and members are compatibility
// jamo characters. Blank lines and lines starting with '#' are ignored.
// The first member of each set is its representative.

#ifndef PHISH_LOOKUP_H_
#define PHISH_LOOKUP_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "phish/hangul.h"

namespace phish {

class TableError : public std::runtime_error {
 public:
  TableError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct PhoneSet {
  JamoPosition position = JamoPosition::kOnset;
  std::string base_phone;
  std::vector<Jamo> members;

  const Jamo& representative() const { return members.front(); }
  bool Contains(Jamo j) const;
};

// How alternatives are drawn for a jamo that belongs to several sets
// (only codas overlap in the default table).
enum class CodaOverlap {
  kUnion,     // members of every containing set
  kFirstSet,  // members of the first containing set only
};

std::string_view CodaOverlapName(CodaOverlap mode);

// Dense slot for a jamo across all three positions: 19 + 21 + 28 slots.
inline constexpr int kJamoSlotCount = kOnsetCount + kNucleusCount + kCodaCount;
int JamoSlot(Jamo j);

// The default table as shipped in data/lookup_table.tsv.
std::string_view DefaultLookupTableText();

class LookupTable {
 public:
  // Throws TableError on malformed input.
  static LookupTable Parse(std::string_view contents,
                           CodaOverlap overlap = CodaOverlap::kUnion);
  static LookupTable Load(const std::filesystem::path& path,
                          CodaOverlap overlap = CodaOverlap::kUnion);
  static const LookupTable& Default();
  static LookupTable Default(CodaOverlap overlap);

  std::span<const PhoneSet> sets() const { return sets_; }
  CodaOverlap coda_overlap() const { return overlap_; }

  // Indices into sets() of every set containing `j`, in table order.
  std::vector<std::size_t> SetsContaining(Jamo j) const;

  // Ordered by table position of the contributing set, then by member order,
  // without duplicates. Never contains `j`; empty for the absent coda.
  std::span<const Jamo> Alternatives(Jamo j) const;
  bool IsSubstitutable(Jamo j) const { return !Alternatives(j).empty(); }

  // Representative of the first set containing `j`, or `j` itself.
  Jamo Canonical(Jamo j) const;

  // Base phone of the first set containing `j`; empty if none.
  std::string_view BasePhone(Jamo j) const;

  // Table file text without comments or blank lines.
  std::string Serialize() const;

 private:
  LookupTable(std::vector<PhoneSet> sets, CodaOverlap overlap);

  std::vector<PhoneSet> sets_;
  CodaOverlap overlap_;
  std::array<std::vector<Jamo>, kJamoSlotCount> alternatives_;
  std::array<int, kJamoSlotCount> first_set_;
};

// Line-oriented reader shared by the table formats; calls `on_row` with
// (line number, position, base phone, members).
void ParseJamoTable(
    std::string_view contents,
    const std::function<void(int, JamoPosition, std::string,
                             std::vector<Jamo>)>& on_row);

}  // namespace phish

#endif  // PHISH_LOOKUP_H_
