// Copyright 2026 The Frame Align Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRAMEALIGN_UTIL_H_
#define FRAMEALIGN_UTIL_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace framealign {

// String helpers.
std::string_view Trim(std::string_view s);
std::string ToLower(std::string_view s);
std::vector<std::string> SplitWhitespace(std::string_view s);
std::vector<std::string> SplitAndTrim(std::string_view s, char sep);
bool StartsWith(std::string_view s, std::string_view prefix);
bool EndsWith(std::string_view s, std::string_view suffix);

// Returns the byte offset of the first invalid UTF-8 sequence, or npos.
size_t FindInvalidUtf8(std::string_view s);

// Reads a whole file. Throws InputError if it cannot be opened.
std::string ReadFile(const std::filesystem::path &path);

// Writes contents to a temporary sibling file and renames it over path, so
// readers never observe a partially written file.
void WriteFileAtomically(const std::filesystem::path &path,
                         std::string_view contents);

// Lowercase hex SHA-256 of the data.
std::string Sha256Hex(std::string_view data);

}  // namespace framealign

#endif  // FRAMEALIGN_UTIL_H_
