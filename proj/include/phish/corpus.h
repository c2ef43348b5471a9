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

// Corpus ingestion, batch perturbation and the run manifest.
//
// Three formats are read and written back in kind:
//   jsonl  one JSON object per line; non-empty lines only.
//   tsv    a header row naming the columns, then one record per row.
//   txt    one text per line; ids are "line-<n>", labels are empty.
// Rewriting a record's text keeps the first original under "text_original"
// (jsonl key or extra tsv column); txt output carries the text alone.

#ifndef PHISH_CORPUS_H_
#define PHISH_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "phish/attack.h"
#include "phish/lookup.h"

namespace phish {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kOriginalTextField = "text_original";

enum class CorpusFormat { kJsonl, kTsv, kTxt };

std::string_view CorpusFormatName(CorpusFormat format);
std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name);
std::optional<CorpusFormat> CorpusFormatFromPath(
    const std::filesystem::path& path);

struct CorpusRecord {
  std::string id;
  std::string text;
  std::string label;
  // The source row, verbatim: the JSON object for jsonl, column -> cell for
  // tsv, null for txt.
  nlohmann::ordered_json fields;

  // Replaces the text, remembering the first original.
  void SetText(std::string new_text);
};

struct IngestOptions {
  CorpusFormat format = CorpusFormat::kJsonl;
  std::string text_field = "text";
  std::optional<std::string> label_field;
  // Abort on the first malformed line instead of skipping it.
  bool strict = false;
};

struct SkippedLine {
  int line = 0;
  std::string reason;
};

struct Corpus {
  IngestOptions options;
  std::vector<std::string> columns;  // tsv header
  std::vector<CorpusRecord> records;
  std::vector<SkippedLine> skipped;
};

// Throws DataError for unreadable input, a missing tsv column, or (strict
// mode) the first malformed line.
Corpus ParseCorpus(std::string_view contents, const IngestOptions& options);
Corpus Ingest(const std::filesystem::path& path, const IngestOptions& options);

std::string FormatCorpus(const Corpus& corpus);

struct RecordCounts {
  std::string id;
  std::size_t vulnerable = 0;
  std::size_t attacked = 0;
};

struct RunManifest {
  PerturbationConfig config;
  CodaOverlap coda_overlap = CodaOverlap::kUnion;
  std::string lookup_table = "builtin";
  std::string input_path;
  std::string output_path;
  CorpusFormat format = CorpusFormat::kJsonl;
  std::size_t skipped_lines = 0;
  std::vector<RecordCounts> records;
  std::string tool_version{kToolVersion};

  std::size_t total_vulnerable() const;
  std::size_t total_attacked() const;
  // Sum of attacked over sum of vulnerable; 0 when nothing is vulnerable.
  double AchievedRatio() const;

  // Records whose attacked count disagrees with ExpectedAttackCount().
  std::vector<std::string> Verify() const;

  nlohmann::ordered_json ToJson() const;
};

struct PerturbResult {
  Corpus corpus;
  RunManifest manifest;
};

// Record i is attacked with seed DeriveStreamSeed(config.seed, i), so the
// output does not depend on `threads`.
PerturbResult PerturbCorpus(const Corpus& corpus,
                            const PerturbationConfig& config,
                            const LookupTable& table = LookupTable::Default(),
                            unsigned threads = 1);

Corpus CanonicalizeCorpus(const Corpus& corpus,
                          const LookupTable& table = LookupTable::Default());

struct JamoReport {
  Jamo jamo;
  std::vector<Jamo> alternatives;
};

struct SyllableReport {
  std::size_t unit_index = 0;
  std::string syllable;
  std::vector<JamoReport> jamos;
  int substitutable = 0;
  // "I_D", "I_S" or "none".
  std::string_view target_class;
};

std::vector<SyllableReport> InspectSyllables(
    std::string_view text, const LookupTable& table = LookupTable::Default());

// Human-readable rendering of InspectSyllables(); empty for empty text.
std::string Inspect(std::string_view text,
                    const LookupTable& table = LookupTable::Default());

}  // namespace phish

#endif  // PHISH_CORPUS_H_
