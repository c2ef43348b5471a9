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

#include "phish/tokenizer.h"

#include <cmath>
#include <stdexcept>

#include "phish/io.h"
#include "phish/utf8.h"

namespace phish {
namespace {

bool IsWhitespace(char32_t c) {
  switch (c) {
    case U' ':
    case U'\t':
    case U'\n':
    case U'\r':
    case U'\v':
    case U'\f':
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

}  // namespace

Vocabulary Vocabulary::FromTokens(std::vector<std::string> tokens,
                                  VocabularyOptions options) {
  Vocabulary vocab;
  vocab.options_ = std::move(options);
  vocab.index_.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const int line = static_cast<int>(i + 1);
    if (tokens[i].empty()) throw DataError("empty vocabulary entry", line);
    if (!vocab.index_.insert(tokens[i]).second) {
      throw DataError("duplicate vocabulary entry '" + tokens[i] + "'", line);
    }
  }
  if (!vocab.index_.contains(vocab.options_.unk_token)) {
    throw DataError("vocabulary has no unknown token '" +
                    vocab.options_.unk_token + "'");
  }
  vocab.tokens_ = std::move(tokens);
  return vocab;
}

Vocabulary Vocabulary::Load(const std::filesystem::path& path,
                            VocabularyOptions options) {
  const std::string contents = ReadTextFile(path);
  std::vector<std::string> tokens;
  std::string_view rest = contents;
  while (!rest.empty()) {
    const std::size_t eol = rest.find('\n');
    std::string_view line = rest.substr(0, eol);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    tokens.emplace_back(line);
    rest.remove_prefix(eol == std::string_view::npos ? rest.size() : eol + 1);
  }
  try {
    return FromTokens(std::move(tokens), std::move(options));
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

std::vector<std::string_view> SplitWords(std::string_view text) {
  std::vector<std::string_view> words;
  std::size_t start = std::string_view::npos;
  for (std::size_t pos = 0; pos < text.size();) {
    const utf8::DecodedChar d = utf8::DecodeAt(text, pos);
    if (d.valid && IsWhitespace(d.code_point)) {
      if (start != std::string_view::npos) {
        words.push_back(text.substr(start, pos - start));
        start = std::string_view::npos;
      }
    } else if (start == std::string_view::npos) {
      start = pos;
    }
    pos += d.length;
  }
  if (start != std::string_view::npos) words.push_back(text.substr(start));
  return words;
}

std::vector<std::string> Tokenize(std::string_view text,
                                  const Vocabulary& vocab) {
  const VocabularyOptions& options = vocab.options();
  std::vector<std::string> tokens;
  for (std::string_view word : SplitWords(text)) {
    // Byte offsets of character boundaries, including the end.
    std::vector<std::size_t> bounds;
    for (std::size_t pos = 0; pos < word.size();
         pos += utf8::DecodeAt(word, pos).length) {
      bounds.push_back(pos);
    }
    bounds.push_back(word.size());
    const std::size_t chars = bounds.size() - 1;
    if (chars > options.max_word_chars) {
      tokens.push_back(options.unk_token);
      continue;
    }

    std::vector<std::string> pieces;
    bool matched = true;
    std::string candidate;
    for (std::size_t start = 0; start < chars && matched;) {
      matched = false;
      for (std::size_t end = chars; end > start; --end) {
        candidate.clear();
        if (start > 0) candidate = options.continuation_prefix;
        candidate.append(word.substr(bounds[start], bounds[end] - bounds[start]));
        if (vocab.Contains(candidate)) {
          pieces.push_back(candidate);
          start = end;
          matched = true;
          break;
        }
      }
    }
    if (matched) {
      tokens.insert(tokens.end(), pieces.begin(), pieces.end());
    } else {
      tokens.push_back(options.unk_token);
    }
  }
  return tokens;
}

UnkReport ComputeUnkReport(std::span<const std::string> texts,
                           const Vocabulary& vocab) {
  if (texts.empty()) throw std::invalid_argument("empty corpus");
  UnkReport report;
  report.per_text_rate.reserve(texts.size());
  for (const std::string& text : texts) {
    const std::vector<std::string> tokens = Tokenize(text, vocab);
    std::size_t unknown = 0;
    for (const std::string& t : tokens) {
      if (t == vocab.options().unk_token) ++unknown;
    }
    report.per_text_rate.push_back(
        tokens.empty() ? 0.0
                       : 100.0 * static_cast<double>(unknown) /
                             static_cast<double>(tokens.size()));
  }
  const auto n = static_cast<double>(texts.size());
  double sum = 0.0;
  for (double rate : report.per_text_rate) sum += rate;
  report.mean = sum / n;
  double squares = 0.0;
  for (double rate : report.per_text_rate) {
    squares += (rate - report.mean) * (rate - report.mean);
  }
  report.std = std::sqrt(squares / n);
  return report;
}

}  // namespace phish
