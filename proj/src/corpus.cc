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

#include "phish/corpus.h"

#include <algorithm>
#include <functional>
#include <sstream>
#include <thread>
#include <unordered_set>
#include <utility>

#include "phish/io.h"
#include "phish/normalize.h"
#include "phish/tokenizer.h"
#include "phish/utf8.h"

namespace phish {
namespace {

using Json = nlohmann::ordered_json;

// A line-level problem that is skipped in lenient mode.
struct Malformed {
  std::string reason;
};

std::vector<std::string_view> SplitLines(std::string_view contents) {
  std::vector<std::string_view> lines;
  while (!contents.empty()) {
    const std::size_t eol = contents.find('\n');
    std::string_view line = contents.substr(0, eol);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    contents.remove_prefix(eol == std::string_view::npos ? contents.size()
                                                         : eol + 1);
  }
  return lines;
}

std::vector<std::string> SplitTabs(std::string_view line) {
  std::vector<std::string> cells;
  for (;;) {
    const std::size_t tab = line.find('\t');
    cells.emplace_back(line.substr(0, tab));
    if (tab == std::string_view::npos) break;
    line.remove_prefix(tab + 1);
  }
  return cells;
}

bool IsBlank(std::string_view text) { return SplitWords(text).empty(); }

std::string ScalarToString(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string LineId(int line) { return "line-" + std::to_string(line); }

CorpusRecord ParseJsonlLine(std::string_view line, int line_number,
                            const IngestOptions& options) {
  Json object;
  try {
    object = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw Malformed{std::string("invalid JSON: ") + e.what()};
  }
  if (!object.is_object()) throw Malformed{"expected a JSON object"};

  CorpusRecord record;
  const auto text = object.find(options.text_field);
  if (text == object.end() || !text->is_string()) {
    throw Malformed{"missing string field '" + options.text_field + "'"};
  }
  record.text = text->get<std::string>();
  if (options.label_field) {
    const auto label = object.find(*options.label_field);
    if (label == object.end() || label->is_null() || label->is_structured()) {
      throw Malformed{"missing field '" + *options.label_field + "'"};
    }
    record.label = ScalarToString(*label);
  }
  const auto id = object.find("id");
  record.id = id != object.end() && (id->is_string() || id->is_number())
                  ? ScalarToString(*id)
                  : LineId(line_number);
  record.fields = std::move(object);
  return record;
}

std::size_t ColumnIndex(const std::vector<std::string>& columns,
                        const std::string& name) {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) {
    throw DataError("tsv header has no column '" + name + "'", 1);
  }
  return static_cast<std::size_t>(it - columns.begin());
}

}  // namespace

std::string_view CorpusFormatName(CorpusFormat format) {
  switch (format) {
    case CorpusFormat::kJsonl:
      return "jsonl";
    case CorpusFormat::kTsv:
      return "tsv";
    case CorpusFormat::kTxt:
      return "txt";
  }
  return "";
}

std::optional<CorpusFormat> ParseCorpusFormat(std::string_view name) {
  for (CorpusFormat f :
       {CorpusFormat::kJsonl, CorpusFormat::kTsv, CorpusFormat::kTxt}) {
    if (CorpusFormatName(f) == name) return f;
  }
  return std::nullopt;
}

std::optional<CorpusFormat> CorpusFormatFromPath(
    const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  if (!ext.empty()) ext.erase(0, 1);
  if (ext == "json") ext = "jsonl";
  return ParseCorpusFormat(ext);
}

void CorpusRecord::SetText(std::string new_text) {
  if (fields.is_object() && !fields.contains(kOriginalTextField)) {
    fields[std::string(kOriginalTextField)] = text;
  }
  text = std::move(new_text);
}

Corpus ParseCorpus(std::string_view contents, const IngestOptions& options) {
  Corpus corpus;
  corpus.options = options;
  const std::vector<std::string_view> lines = SplitLines(contents);

  std::size_t first_row = 0;
  std::size_t text_column = 0;
  std::optional<std::size_t> label_column;
  std::optional<std::size_t> id_column;
  if (options.format == CorpusFormat::kTsv) {
    if (lines.empty()) throw DataError("tsv input has no header", 1);
    corpus.columns = SplitTabs(lines.front());
    text_column = ColumnIndex(corpus.columns, options.text_field);
    if (options.label_field) {
      label_column = ColumnIndex(corpus.columns, *options.label_field);
    }
    const auto id = std::find(corpus.columns.begin(), corpus.columns.end(),
                              std::string("id"));
    if (id != corpus.columns.end()) {
      id_column = static_cast<std::size_t>(id - corpus.columns.begin());
    }
    first_row = 1;
  }

  std::unordered_set<std::string> ids;
  for (std::size_t i = first_row; i < lines.size(); ++i) {
    const int line_number = static_cast<int>(i + 1);
    const std::string_view line = lines[i];
    if (line.empty() && options.format != CorpusFormat::kTxt) continue;
    try {
      if (!utf8::IsValid(line)) throw Malformed{"invalid UTF-8"};
      CorpusRecord record;
      switch (options.format) {
        case CorpusFormat::kJsonl:
          record = ParseJsonlLine(line, line_number, options);
          break;
        case CorpusFormat::kTsv: {
          std::vector<std::string> cells = SplitTabs(line);
          if (cells.size() != corpus.columns.size()) {
            throw Malformed{"expected " +
                            std::to_string(corpus.columns.size()) +
                            " columns, found " + std::to_string(cells.size())};
          }
          record.text = cells[text_column];
          if (label_column) record.label = cells[*label_column];
          record.id = id_column ? cells[*id_column] : LineId(line_number);
          record.fields = Json::object();
          for (std::size_t c = 0; c < cells.size(); ++c) {
            record.fields[corpus.columns[c]] = std::move(cells[c]);
          }
          break;
        }
        case CorpusFormat::kTxt:
          record.text = std::string(line);
          record.id = LineId(line_number);
          break;
      }
      if (IsBlank(record.text)) throw Malformed{"empty text"};
      if (!ids.insert(record.id).second) {
        throw Malformed{"duplicate id '" + record.id + "'"};
      }
      corpus.records.push_back(std::move(record));
    } catch (const Malformed& m) {
      if (options.strict) throw DataError(m.reason, line_number);
      corpus.skipped.push_back({line_number, m.reason});
    }
  }
  return corpus;
}

Corpus Ingest(const std::filesystem::path& path, const IngestOptions& options) {
  try {
    return ParseCorpus(ReadTextFile(path), options);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::string FormatCorpus(const Corpus& corpus) {
  std::string out;
  const IngestOptions& options = corpus.options;
  switch (options.format) {
    case CorpusFormat::kJsonl:
      for (const CorpusRecord& record : corpus.records) {
        Json row = record.fields.is_object() ? record.fields : Json::object();
        row[options.text_field] = record.text;
        out += row.dump();
        out += '\n';
      }
      break;
    case CorpusFormat::kTsv: {
      std::vector<std::string> columns = corpus.columns;
      const std::string original(kOriginalTextField);
      const bool has_original = std::any_of(
          corpus.records.begin(), corpus.records.end(),
          [&](const CorpusRecord& r) { return r.fields.contains(original); });
      if (has_original &&
          std::find(columns.begin(), columns.end(), original) ==
              columns.end()) {
        columns.push_back(original);
      }
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c > 0) out += '\t';
        out += columns[c];
      }
      out += '\n';
      for (const CorpusRecord& record : corpus.records) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
          if (c > 0) out += '\t';
          if (columns[c] == options.text_field) {
            out += record.text;
          } else if (const auto it = record.fields.find(columns[c]);
                     it != record.fields.end()) {
            out += ScalarToString(*it);
          }
        }
        out += '\n';
      }
      break;
    }
    case CorpusFormat::kTxt:
      for (const CorpusRecord& record : corpus.records) {
        out += record.text;
        out += '\n';
      }
      break;
  }
  return out;
}

std::size_t RunManifest::total_vulnerable() const {
  std::size_t total = 0;
  for (const RecordCounts& r : records) total += r.vulnerable;
  return total;
}

std::size_t RunManifest::total_attacked() const {
  std::size_t total = 0;
  for (const RecordCounts& r : records) total += r.attacked;
  return total;
}

double RunManifest::AchievedRatio() const {
  const std::size_t vulnerable = total_vulnerable();
  if (vulnerable == 0) return 0.0;
  return static_cast<double>(total_attacked()) /
         static_cast<double>(vulnerable);
}

std::vector<std::string> RunManifest::Verify() const {
  std::vector<std::string> problems;
  for (const RecordCounts& r : records) {
    const std::size_t expected = ExpectedAttackCount(config.ratio, r.vulnerable);
    if (r.attacked != expected) {
      problems.push_back(r.id + ": attacked " + std::to_string(r.attacked) +
                         " of " + std::to_string(r.vulnerable) +
                         ", expected " + std::to_string(expected));
    }
  }
  return problems;
}

nlohmann::ordered_json RunManifest::ToJson() const {
  Json records_json = Json::array();
  for (const RecordCounts& r : records) {
    records_json.push_back(
        {{"id", r.id}, {"n_V", r.vulnerable}, {"n_A", r.attacked}});
  }
  return {
      {"tool", "phish"},
      {"tool_version", tool_version},
      {"config",
       {{"ratio", config.ratio},
        {"mode", AttackModeName(config.mode)},
        {"seed", config.seed},
        {"coda_overlap", CodaOverlapName(coda_overlap)},
        {"lookup_table", lookup_table},
        {"prng", "mt19937_64; per-record seed = DeriveStreamSeed(seed, index)"}}},
      {"input", input_path},
      {"output", output_path},
      {"format", CorpusFormatName(format)},
      {"records_total", records.size()},
      {"skipped_lines", skipped_lines},
      {"n_V", total_vulnerable()},
      {"n_A", total_attacked()},
      {"achieved_ratio", AchievedRatio()},
      {"records", std::move(records_json)},
  };
}

PerturbResult PerturbCorpus(const Corpus& corpus,
                            const PerturbationConfig& config,
                            const LookupTable& table, unsigned threads) {
  ValidateRatio(config.ratio);
  PerturbResult result{corpus, {}};
  std::vector<CorpusRecord>& records = result.corpus.records;
  std::vector<RecordCounts> counts(records.size());

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < records.size(); i += stride) {
      PerturbationConfig record_config = config;
      record_config.seed = DeriveStreamSeed(config.seed, i);
      AttackOutcome outcome = Phish(records[i].text, record_config, table);
      counts[i] = {records[i].id, outcome.vulnerable, outcome.attacked};
      records[i].SetText(std::move(outcome.perturbed_text));
    }
  };
  threads = std::max(1u, std::min<unsigned>(
                             threads, static_cast<unsigned>(records.size())));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  RunManifest& manifest = result.manifest;
  manifest.config = config;
  manifest.coda_overlap = table.coda_overlap();
  manifest.format = corpus.options.format;
  manifest.skipped_lines = corpus.skipped.size();
  manifest.records = std::move(counts);
  return result;
}

Corpus CanonicalizeCorpus(const Corpus& corpus, const LookupTable& table) {
  Corpus result = corpus;
  for (CorpusRecord& record : result.records) {
    record.SetText(Canonicalize(record.text, table).text);
  }
  return result;
}

std::vector<SyllableReport> InspectSyllables(std::string_view text,
                                             const LookupTable& table) {
  std::vector<SyllableReport> reports;
  const std::vector<TextUnit> units = Segment(text);
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!units[i].IsSyllable()) continue;
    SyllableReport report;
    report.unit_index = i;
    report.syllable = units[i].ToString();
    for (const Jamo& j : units[i].syllable().PresentJamos()) {
      const auto alternatives = table.Alternatives(j);
      report.jamos.push_back({j, {alternatives.begin(), alternatives.end()}});
      if (!alternatives.empty()) ++report.substitutable;
    }
    report.target_class = report.substitutable >= 2   ? "I_D"
                          : report.substitutable == 1 ? "I_S"
                                                      : "none";
    reports.push_back(std::move(report));
  }
  return reports;
}

std::string Inspect(std::string_view text, const LookupTable& table) {
  const std::vector<SyllableReport> reports = InspectSyllables(text, table);
  if (reports.empty()) return {};
  std::ostringstream out;
  std::size_t doubles = 0;
  std::size_t singles = 0;
  for (const SyllableReport& r : reports) {
    out << '[' << r.unit_index << "] " << r.syllable << "  c=" << r.substitutable
        << "  class=" << r.target_class << '\n';
    for (const JamoReport& j : r.jamos) {
      out << "    " << PositionName(j.jamo.position) << ' '
          << j.jamo.ToString() << " ->";
      if (j.alternatives.empty()) out << " (none)";
      for (const Jamo& a : j.alternatives) out << ' ' << a.ToString();
      out << '\n';
    }
    if (r.substitutable >= 2) ++doubles;
    if (r.substitutable == 1) ++singles;
  }
  out << "syllables=" << reports.size() << "  I_D=" << doubles
      << "  I_S=" << singles << "  n_V=" << doubles + singles << '\n';
  return out.str();
}

}  // namespace phish
