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

#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "phish/io.h"
#include "phish/utf8.h"
#include "support/synthetic.h"

namespace phish {
namespace {

using Tokens = std::vector<std::string>;

Vocabulary KimbapVocab() { return Vocabulary::FromTokens({"[UNK]", "김", "##밥"}); }

std::string WriteTemp(const std::string& name, const std::string& contents) {
  const std::string path = testing::TempDir() + "/" + name;
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

TEST(VocabularyTest, LoadsOneTokenPerLine) {
  const Vocabulary vocab =
      Vocabulary::Load(WriteTemp("v1.txt", "[UNK]\n김\n##밥\n"));
  EXPECT_EQ(vocab.size(), 3u);
  EXPECT_EQ(vocab.tokens(), (Tokens{"[UNK]", "김", "##밥"}));
  EXPECT_TRUE(vocab.Contains("##밥"));
}

TEST(VocabularyTest, TokenCountEqualsLineCount) {
  std::string contents = "[PAD]\r\n[UNK]\r\n";
  for (int i = 0; i < 500; ++i) contents += "tok" + std::to_string(i) + "\r\n";
  const Vocabulary vocab = Vocabulary::Load(WriteTemp("v2.txt", contents));
  EXPECT_EQ(vocab.size(), 502u);
  EXPECT_TRUE(vocab.Contains("tok499"));
}

TEST(VocabularyTest, Errors) {
  EXPECT_THROW(Vocabulary::Load(WriteTemp("v3.txt", "김\n##밥\n")), DataError);
  EXPECT_THROW(Vocabulary::Load("/nonexistent/vocab.txt"), DataError);
  EXPECT_THROW(Vocabulary::FromTokens({"[UNK]", "a", "a"}), DataError);
  EXPECT_THROW(Vocabulary::FromTokens({"[UNK]", "", "a"}), DataError);
  VocabularyOptions options;
  options.unk_token = "<unk>";
  EXPECT_THROW(Vocabulary::FromTokens({"[UNK]"}, options), DataError);
  EXPECT_NO_THROW(Vocabulary::FromTokens({"<unk>"}, options));
}

TEST(TokenizeTest, Examples) {
  const Vocabulary vocab = KimbapVocab();
  EXPECT_EQ(Tokenize("김밥", vocab), (Tokens{"김", "##밥"}));
  EXPECT_EQ(Tokenize("킴", vocab), (Tokens{"[UNK]"}));
  EXPECT_EQ(Tokenize("  김밥\t김 킴밥　김", vocab),
            (Tokens{"김", "##밥", "김", "[UNK]", "김"}));
  EXPECT_TRUE(Tokenize("", vocab).empty());
  EXPECT_TRUE(Tokenize(" \n ", vocab).empty());
}

TEST(TokenizeTest, LongestMatchFirst) {
  const Vocabulary vocab =
      Vocabulary::FromTokens({"[UNK]", "a", "ab", "abc", "##d", "##cd"});
  EXPECT_EQ(Tokenize("abcd", vocab), (Tokens{"abc", "##d"}));
  EXPECT_EQ(Tokenize("abd", vocab), (Tokens{"ab", "##d"}));
  // A dead end after a greedy choice makes the whole word unknown.
  EXPECT_EQ(Tokenize("abce", vocab), (Tokens{"[UNK]"}));
}

TEST(TokenizeTest, WordLengthLimitCountsCharacters) {
  VocabularyOptions options;
  options.max_word_chars = 3;
  const Vocabulary vocab = Vocabulary::FromTokens({"[UNK]", "가", "##가"}, options);
  EXPECT_EQ(Tokenize("가가가", vocab), (Tokens{"가", "##가", "##가"}));
  EXPECT_EQ(Tokenize("가가가가", vocab), (Tokens{"[UNK]"}));
}

TEST(TokenizeTest, CoveredWordsHaveNoUnknownAndDetokenize) {
  phish_testing::Engine engine(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::string word = phish_testing::RandomText(
        engine, {.min_words = 1, .max_words = 1, .min_word_syllables = 1,
                 .max_word_syllables = 8, .punctuation_percent = 0});
    std::set<std::string> pieces = {"[UNK]"};
    for (char32_t c : utf8::Decode(word)) {
      pieces.insert(utf8::Encode(c));
      pieces.insert("##" + utf8::Encode(c));
    }
    const Vocabulary vocab =
        Vocabulary::FromTokens({pieces.begin(), pieces.end()});
    const Tokens tokens = Tokenize(word, vocab);
    std::string joined;
    for (const std::string& t : tokens) {
      ASSERT_NE(t, "[UNK]");
      joined += t.starts_with("##") ? t.substr(2) : t;
    }
    EXPECT_EQ(joined, word);
  }
}

TEST(UnkReportTest, AllKnown) {
  const std::vector<std::string> texts = {"김밥", "김 김"};
  const UnkReport report = ComputeUnkReport(texts, KimbapVocab());
  EXPECT_EQ(report.per_text_rate, (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(report.mean, 0.0);
  EXPECT_EQ(report.std, 0.0);
}

TEST(UnkReportTest, Arithmetic) {
  // [[UNK], 김] and [김, ##밥].
  const std::vector<std::string> texts = {"킴 김", "김밥"};
  const UnkReport report = ComputeUnkReport(texts, KimbapVocab());
  EXPECT_EQ(report.per_text_rate, (std::vector<double>{50.0, 0.0}));
  EXPECT_DOUBLE_EQ(report.mean, 25.0);
  EXPECT_DOUBLE_EQ(report.std, 25.0);
}

TEST(UnkReportTest, EmptyTextCountsAsZeroAndEmptyCorpusThrows) {
  const std::vector<std::string> texts = {"", "킴"};
  EXPECT_EQ(ComputeUnkReport(texts, KimbapVocab()).per_text_rate,
            (std::vector<double>{0.0, 100.0}));
  EXPECT_THROW(ComputeUnkReport(std::vector<std::string>{}, KimbapVocab()),
               std::invalid_argument);
}

}  // namespace
}  // namespace phish
