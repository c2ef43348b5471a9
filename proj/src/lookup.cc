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

#include "phish/lookup.h"

#include <algorithm>
#include <utility>

#include "embedded_tables.h"
#include "phish/io.h"
#include "phish/utf8.h"

namespace phish {
namespace {

std::string_view TrimLineEnd(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
    line.remove_suffix(1);
  }
  return line;
}

}  // namespace

TableError::TableError(int line, const std::string& message)
    : std::runtime_error("table line " + std::to_string(line) + ": " +
                         message),
      line_(line) {}

bool PhoneSet::Contains(Jamo j) const {
  return std::find(members.begin(), members.end(), j) != members.end();
}

std::string_view CodaOverlapName(CodaOverlap mode) {
  return mode == CodaOverlap::kUnion ? "union" : "first-set";
}

int JamoSlot(Jamo j) {
  switch (j.position) {
    case JamoPosition::kOnset:
      return j.index;
    case JamoPosition::kNucleus:
      return kOnsetCount + j.index;
    case JamoPosition::kCoda:
      return kOnsetCount + kNucleusCount + j.index;
  }
  return -1;
}

std::string_view DefaultLookupTableText() { return internal::kLookupTableText; }

void ParseJamoTable(
    std::string_view contents,
    const std::function<void(int, JamoPosition, std::string,
                             std::vector<Jamo>)>& on_row) {
  int line_number = 0;
  while (!contents.empty()) {
    const std::size_t eol = contents.find('\n');
    std::string_view line = TrimLineEnd(contents.substr(0, eol));
    contents.remove_prefix(eol == std::string_view::npos ? contents.size()
                                                         : eol + 1);
    ++line_number;
    if (line.empty() || line.front() == '#') continue;

    const std::size_t tab1 = line.find('\t');
    const std::size_t tab2 = tab1 == std::string_view::npos
                                 ? std::string_view::npos
                                 : line.find('\t', tab1 + 1);
    if (tab2 == std::string_view::npos ||
        line.find('\t', tab2 + 1) != std::string_view::npos) {
      throw TableError(line_number, "expected three tab-separated fields");
    }
    const auto position = ParsePosition(line.substr(0, tab1));
    if (!position) {
      throw TableError(line_number, "unknown position '" +
                                        std::string(line.substr(0, tab1)) +
                                        "'");
    }
    std::string base_phone(line.substr(tab1 + 1, tab2 - tab1 - 1));
    if (base_phone.empty()) throw TableError(line_number, "empty base phone");

    std::vector<Jamo> members;
    const std::string_view member_text = line.substr(tab2 + 1);
    for (std::size_t pos = 0; pos < member_text.size();) {
      const utf8::DecodedChar d = utf8::DecodeAt(member_text, pos);
      pos += d.length;
      if (d.code_point == U' ' || d.code_point == U',') continue;
      const auto jamo = d.valid ? Jamo::FromDisplayChar(*position, d.code_point)
                                : std::nullopt;
      if (!jamo) {
        throw TableError(line_number,
                         "'" + utf8::Encode(d.code_point) + "' is not a " +
                             std::string(PositionName(*position)) + " jamo");
      }
      members.push_back(*jamo);
    }
    if (members.empty()) throw TableError(line_number, "no members");
    on_row(line_number, *position, std::move(base_phone), std::move(members));
  }
}

LookupTable LookupTable::Parse(std::string_view contents,
                               CodaOverlap overlap) {
  std::vector<PhoneSet> sets;
  ParseJamoTable(contents, [&](int line, JamoPosition position,
                               std::string base_phone,
                               std::vector<Jamo> members) {
    if (members.size() < 2) {
      throw TableError(line, "a set needs at least two members");
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (std::find(members.begin(), members.begin() + i, members[i]) !=
          members.begin() + i) {
        throw TableError(line, "duplicate member " + members[i].ToString());
      }
    }
    // Only codas may belong to more than one set.
    if (position != JamoPosition::kCoda) {
      for (const PhoneSet& other : sets) {
        if (other.position != position) continue;
        for (const Jamo& j : members) {
          if (other.Contains(j)) {
            throw TableError(line, j.ToString() + " already belongs to " +
                                       other.base_phone);
          }
        }
      }
    }
    sets.push_back({position, std::move(base_phone), std::move(members)});
  });
  return LookupTable(std::move(sets), overlap);
}

LookupTable LookupTable::Load(const std::filesystem::path& path,
                              CodaOverlap overlap) {
  return Parse(ReadTextFile(path), overlap);
}

const LookupTable& LookupTable::Default() {
  static const LookupTable table = Parse(DefaultLookupTableText());
  return table;
}

LookupTable LookupTable::Default(CodaOverlap overlap) {
  return Parse(DefaultLookupTableText(), overlap);
}

LookupTable::LookupTable(std::vector<PhoneSet> sets, CodaOverlap overlap)
    : sets_(std::move(sets)), overlap_(overlap) {
  first_set_.fill(-1);
  for (std::size_t s = 0; s < sets_.size(); ++s) {
    const PhoneSet& set = sets_[s];
    for (const Jamo& j : set.members) {
      const int slot = JamoSlot(j);
      const bool first = first_set_[slot] < 0;
      if (first) first_set_[slot] = static_cast<int>(s);
      if (!first && overlap_ == CodaOverlap::kFirstSet) continue;
      auto& alternatives = alternatives_[slot];
      for (const Jamo& other : set.members) {
        if (other != j && std::find(alternatives.begin(), alternatives.end(),
                                    other) == alternatives.end()) {
          alternatives.push_back(other);
        }
      }
    }
  }
}

std::vector<std::size_t> LookupTable::SetsContaining(Jamo j) const {
  std::vector<std::size_t> indices;
  for (std::size_t s = 0; s < sets_.size(); ++s) {
    if (sets_[s].position == j.position && sets_[s].Contains(j)) {
      indices.push_back(s);
    }
  }
  return indices;
}

std::span<const Jamo> LookupTable::Alternatives(Jamo j) const {
  if (!j.IsValid()) return {};
  return alternatives_[JamoSlot(j)];
}

Jamo LookupTable::Canonical(Jamo j) const {
  if (!j.IsValid()) return j;
  const int s = first_set_[JamoSlot(j)];
  return s < 0 ? j : sets_[s].representative();
}

std::string_view LookupTable::BasePhone(Jamo j) const {
  if (!j.IsValid()) return {};
  const int s = first_set_[JamoSlot(j)];
  return s < 0 ? std::string_view() : std::string_view(sets_[s].base_phone);
}

std::string LookupTable::Serialize() const {
  std::string out;
  for (const PhoneSet& set : sets_) {
    out += PositionName(set.position);
    out += '\t';
    out += set.base_phone;
    out += '\t';
    for (const Jamo& j : set.members) out += j.ToString();
    out += '\n';
  }
  return out;
}

}  // namespace phish
