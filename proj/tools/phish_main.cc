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

// phish: phonetic substitution attack and measurement tool for Korean text.
//
//   phish perturb      --input IN --ratio R --mode single|dual --seed N
//                      --output OUT [--manifest PATH] ...
//   phish stats        --input IN --vocab VOCAB [--phonemes] [--per-text]
//   phish canonicalize --input IN --output OUT
//   phish inspect      TEXT
//
// Exit status: 0 success, 1 usage error, 2 data error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "phish/attack.h"
#include "phish/corpus.h"
#include "phish/io.h"
#include "phish/lookup.h"
#include "phish/normalize.h"
#include "phish/tokenizer.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string input;
  std::string format;
  std::string text_field = "text";
  std::string label_field;
  bool strict = false;

  void Register(CLI::App* cmd) {
    cmd->add_option("--input", input, "Input corpus")->required();
    cmd->add_option("--format", format,
                    "jsonl, tsv or txt (default: from the file extension)")
        ->check(CLI::IsMember({"jsonl", "tsv", "txt"}));
    cmd->add_option("--text-field", text_field, "Field holding the text")
        ->capture_default_str();
    cmd->add_option("--label-field", label_field, "Field holding the label");
    cmd->add_flag("--strict", strict, "Abort on the first malformed line");
  }

  phish::Corpus Load() const {
    phish::IngestOptions options;
    if (!format.empty()) {
      options.format = *phish::ParseCorpusFormat(format);
    } else if (auto f = phish::CorpusFormatFromPath(input)) {
      options.format = *f;
    } else {
      throw UsageError("cannot infer the format of " + input +
                       "; pass --format");
    }
    options.text_field = text_field;
    if (!label_field.empty()) options.label_field = label_field;
    options.strict = strict;
    phish::Corpus corpus = phish::Ingest(input, options);
    for (const phish::SkippedLine& s : corpus.skipped) {
      std::cerr << "phish: " << input << ": skipped line " << s.line << ": "
                << s.reason << '\n';
    }
    return corpus;
  }
};

struct TableFlags {
  std::string lookup_table;
  std::string coda_overlap = "union";

  void Register(CLI::App* cmd) {
    cmd->add_option("--lookup-table", lookup_table,
                    "Substitution table file (default: built-in)");
    cmd->add_option("--coda-overlap", coda_overlap,
                    "Alternatives for codas in several sets")
        ->check(CLI::IsMember({"union", "first-set"}))
        ->capture_default_str();
  }

  phish::LookupTable Load() const {
    const phish::CodaOverlap overlap = coda_overlap == "first-set"
                                           ? phish::CodaOverlap::kFirstSet
                                           : phish::CodaOverlap::kUnion;
    if (lookup_table.empty()) return phish::LookupTable::Default(overlap);
    return phish::LookupTable::Load(lookup_table, overlap);
  }
};

int RunPerturb(const InputFlags& in, const TableFlags& tables, double ratio,
               const std::string& mode, std::uint64_t seed,
               const std::string& output, const std::string& manifest_path,
               unsigned threads) {
  const phish::LookupTable table = tables.Load();
  const phish::Corpus corpus = in.Load();
  const phish::PerturbationConfig config{
      ratio, *phish::ParseAttackMode(mode), seed};
  phish::PerturbResult result =
      phish::PerturbCorpus(corpus, config, table, threads);

  phish::RunManifest& manifest = result.manifest;
  manifest.input_path = in.input;
  manifest.output_path = output;
  manifest.lookup_table =
      tables.lookup_table.empty() ? "builtin" : tables.lookup_table;
  if (const auto problems = manifest.Verify(); !problems.empty()) {
    for (const std::string& p : problems) std::cerr << "phish: " << p << '\n';
    return kExitData;
  }

  phish::WriteTextFile(output, phish::FormatCorpus(result.corpus));
  if (!manifest_path.empty()) {
    phish::WriteTextFile(manifest_path, manifest.ToJson().dump(2) + "\n");
  }
  std::cerr << "phish: perturbed " << manifest.records.size()
            << " records, n_A/n_V = " << manifest.total_attacked() << '/'
            << manifest.total_vulnerable() << '\n';
  return 0;
}

int RunStats(const InputFlags& in, const TableFlags& tables,
             const std::string& vocab_path, const std::string& ipa_path,
             const phish::VocabularyOptions& vocab_options, bool phonemes,
             bool per_text, const std::string& output) {
  const phish::Vocabulary vocab =
      phish::Vocabulary::Load(vocab_path, vocab_options);
  const phish::Corpus corpus = in.Load();
  if (corpus.records.empty()) throw phish::DataError("corpus has no records");

  std::vector<std::string> texts;
  texts.reserve(corpus.records.size());
  if (phonemes) {
    const phish::LookupTable table = tables.Load();
    const phish::IpaTable ipa = ipa_path.empty()
                                    ? phish::IpaTable::Default()
                                    : phish::IpaTable::Load(ipa_path);
    for (const phish::CorpusRecord& r : corpus.records) {
      texts.push_back(phish::Transcribe(r.text, table, ipa).Render());
    }
  } else {
    for (const phish::CorpusRecord& r : corpus.records) texts.push_back(r.text);
  }
  const phish::UnkReport report = phish::ComputeUnkReport(texts, vocab);

  nlohmann::ordered_json json = {
      {"input", in.input},
      {"vocab", vocab_path},
      {"sequence", phonemes ? "phonemes" : "text"},
      {"texts", texts.size()},
      {"mean", report.mean},
      {"std", report.std},
  };
  if (per_text) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < texts.size(); ++i) {
      rows.push_back({{"id", corpus.records[i].id},
                      {"unk_rate", report.per_text_rate[i]}});
    }
    json["per_text"] = std::move(rows);
  }
  const std::string text = json.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    phish::WriteTextFile(output, text);
  }
  return 0;
}

int RunCanonicalize(const InputFlags& in, const TableFlags& tables,
                    const std::string& output) {
  const phish::LookupTable table = tables.Load();
  const phish::Corpus corpus = in.Load();
  phish::WriteTextFile(output,
                       phish::FormatCorpus(phish::CanonicalizeCorpus(corpus, table)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phonetic substitution attack toolkit for Korean text"};
  app.set_version_flag("--version", std::string(phish::kToolVersion));
  app.require_subcommand(1);

  InputFlags in;
  TableFlags tables;

  auto* perturb = app.add_subcommand("perturb", "Perturb a corpus");
  double ratio = 0.0;
  std::string mode;
  std::uint64_t seed = 0;
  std::string output;
  std::string manifest;
  unsigned threads = 1;
  in.Register(perturb);
  tables.Register(perturb);
  perturb->add_option("--ratio", ratio, "Fraction of vulnerable syllables")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  perturb->add_option("--mode", mode, "single or dual")
      ->required()
      ->check(CLI::IsMember({"single", "dual"}));
  perturb->add_option("--seed", seed, "Random seed")->required();
  perturb->add_option("--output", output, "Output corpus")->required();
  perturb->add_option("--manifest", manifest, "Write the run manifest here");
  perturb->add_option("--threads", threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  auto* stats = app.add_subcommand("stats", "Unknown-token statistics");
  std::string vocab_path;
  std::string ipa_path;
  bool phonemes = false;
  bool per_text = false;
  std::string stats_output;
  phish::VocabularyOptions vocab_options;
  in.Register(stats);
  tables.Register(stats);
  stats->add_option("--vocab", vocab_path, "Vocabulary, one token per line")
      ->required();
  stats->add_flag("--phonemes", phonemes, "Measure the phoneme transcription");
  stats->add_option("--ipa-table", ipa_path, "Jamo IPA table for --phonemes");
  stats->add_flag("--per-text", per_text, "Include per-text rates");
  stats->add_option("--unk-token", vocab_options.unk_token)
      ->capture_default_str();
  stats->add_option("--continuation-prefix", vocab_options.continuation_prefix)
      ->capture_default_str();
  stats->add_option("--output", stats_output, "Write JSON here, not stdout");

  auto* canonicalize =
      app.add_subcommand("canonicalize", "Map jamos to set representatives");
  std::string canonical_output;
  in.Register(canonicalize);
  tables.Register(canonicalize);
  canonicalize->add_option("--output", canonical_output, "Output corpus")
      ->required();

  auto* inspect = app.add_subcommand("inspect", "Show vulnerable syllables");
  std::string inspect_text;
  inspect->add_option("text", inspect_text, "Text to inspect")->required();
  tables.Register(inspect);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitUsage;
  }

  try {
    if (perturb->parsed()) {
      return RunPerturb(in, tables, ratio, mode, seed, output, manifest,
                        threads);
    }
    if (stats->parsed()) {
      return RunStats(in, tables, vocab_path, ipa_path, vocab_options,
                      phonemes, per_text, stats_output);
    }
    if (canonicalize->parsed()) {
      return RunCanonicalize(in, tables, canonical_output);
    }
    if (inspect->parsed()) {
      std::cout << phish::Inspect(inspect_text, tables.Load());
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "phish: " << e.what() << '\n';
    return kExitUsage;
  } catch (const phish::DataError& e) {
    std::cerr << "phish: " << e.what() << '\n';
    return kExitData;
  } catch (const phish::TableError& e) {
    std::cerr << "phish: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
