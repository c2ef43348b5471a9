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

#ifndef PHISH_UTF8_H_
#define PHISH_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace phish::utf8 {

inline constexpr char32_t kMaxCodePoint = 0x10FFFF;

// One decoding step. `length` is always >= 1 so callers can make progress
// over malformed input; `valid` is false for ill-formed sequences, in which
// case `code_point` is U+FFFD and `length` covers a single byte.
struct DecodedChar {
  char32_t code_point;
  std::size_t length;
  bool valid;
};

DecodedChar DecodeAt(std::string_view text, std::size_t pos);

bool IsScalarValue(char32_t c);

void Append(char32_t c, std::string& out);
std::string Encode(char32_t c);

// Lenient decode; ill-formed bytes become U+FFFD.
std::u32string Decode(std::string_view text);
std::string Encode(std::u32string_view text);

bool IsValid(std::string_view text);

// Number of code points, counting each ill-formed byte as one.
std::size_t Length(std::string_view text);

}  // namespace phish::utf8

#endif  // PHISH_UTF8_H_
