//
// Copyright 2026 The lexsimp Authors
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
//

#ifndef LEXSIMP_TEXT_H_
#define LEXSIMP_TEXT_H_

#include <cstddef>
#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lexsimp {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
};

// String-keyed map that accepts std::string_view lookups without copying.
template <typename V>
using StringMap = std::unordered_map<std::string, V, StringHash, std::equal_to<>>;

// Raised for malformed input files. The message carries the 1-based line
// number when one applies, e.g. "line 3: invalid count".
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FormatError LineError(std::size_t line, std::string_view what);

// All case handling is ASCII-only; bytes >= 0x80 pass through untouched.
inline bool IsAsciiUpper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool IsAsciiLower(char c) { return c >= 'a' && c <= 'z'; }
inline bool IsAsciiAlpha(char c) { return IsAsciiUpper(c) || IsAsciiLower(c); }
inline bool IsAsciiDigit(char c) { return c >= '0' && c <= '9'; }
bool IsAsciiPunct(char c);
inline bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string ToLower(std::string_view s);
std::string_view Trim(std::string_view s);
std::vector<std::string_view> SplitWhitespace(std::string_view s);

// True when `word` is made only of ASCII punctuation and digits (or is
// empty). Such words are never rarity or replacement targets.
bool IsPunctOrDigits(std::string_view word);

// At least one ASCII letter or non-ASCII byte.
bool HasLetter(std::string_view word);

// At least one letter and no digits. Non-ASCII bytes count as letters.
bool IsAlphabetic(std::string_view word);

bool StartsUpper(std::string_view s);
std::string CapitalizeFirst(std::string s);

bool IsValidUtf8(std::string_view s);

std::string JoinWords(const std::vector<std::string>& words);

// Iterates the lines of a resource file, skipping blank lines and lines
// whose first non-space character is '#'. Line numbers are 1-based.
template <typename Fn>
void ForEachResourceLine(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    if (!IsValidUtf8(trimmed)) throw LineError(number, "invalid UTF-8");
    fn(number, trimmed);
  }
}

}  // namespace lexsimp

#endif  // LEXSIMP_TEXT_H_
