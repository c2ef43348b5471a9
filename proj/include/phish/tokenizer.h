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

// Greedy longest-match-first subword tokenizer (WordPiece style) and
// unknown-token statistics.

#ifndef PHISH_TOKENIZER_H_
#define PHISH_TOKENIZER_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace phish {

struct VocabularyOptions {
  std::string continuation_prefix = "##";
  std::string unk_token = "[UNK]";
  std::size_t max_word_chars = 100;
};

class Vocabulary {
 public:
  // Throws DataError when the file is missing, has an empty or duplicate
  // line, or lacks the unknown token.
  static Vocabulary Load(const std::filesystem::path& path,
                         VocabularyOptions options = {});
  // Same checks as Load(); errors carry the 1-based token position.
  static Vocabulary FromTokens(std::vector<std::string> tokens,
                               VocabularyOptions options = {});

  const std::vector<std::string>& tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool Contains(const std::string& token) const {
    return index_.contains(token);
  }
  const VocabularyOptions& options() const { return options_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_set<std::string> index_;
  VocabularyOptions options_;
};

// Splits on Unicode whitespace.
std::vector<std::string_view> SplitWords(std::string_view text);

std::vector<std::string> Tokenize(std::string_view text,
                                  const Vocabulary& vocab);

struct UnkReport {
  // Percentage of unknown tokens per text; 0 for texts with no tokens.
  std::vector<double> per_text_rate;
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
};

// Throws std::invalid_argument for an empty corpus.
UnkReport ComputeUnkReport(std::span<const std::string> texts,
                           const Vocabulary& vocab);

}  // namespace phish

#endif  // PHISH_TOKENIZER_H_
