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

#ifndef PHISH_IO_H_
#define PHISH_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace phish {

// Input data could not be read or is malformed. `line` is 1-based, 0 when
// the problem is not tied to a line.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& message, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace phish

#endif  // PHISH_IO_H_
