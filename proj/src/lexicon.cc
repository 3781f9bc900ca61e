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

#include "lexsimp/lexicon.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

#include "lexsimp/text.h"

namespace lexsimp {
namespace {

// Lowercases into a stack buffer for short words so lookups do not allocate.
template <typename Fn>
auto WithLowerKey(std::string_view word, Fn&& fn) {
  char buffer[64];
  if (word.size() <= sizeof(buffer)) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      const char c = word[i];
      buffer[i] = IsAsciiUpper(c) ? static_cast<char>(c - 'A' + 'a') : c;
    }
    return fn(std::string_view(buffer, word.size()));
  }
  const std::string lowered = ToLower(word);
  return fn(std::string_view(lowered));
}

}  // namespace

void FrequencyTable::Add(std::string_view word, Count count) {
  auto [it, inserted] = counts_.try_emplace(ToLower(word), count);
  if (!inserted) it->second = std::max(it->second, count);
  max_count_ = std::max(max_count_, count);
}

Count FrequencyTable::Frequency(std::string_view word) const {
  return WithLowerKey(word, [this](std::string_view key) -> Count {
    const auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
  });
}

bool FrequencyTable::Contains(std::string_view word) const {
  return WithLowerKey(word, [this](std::string_view key) {
    return counts_.find(key) != counts_.end();
  });
}

bool FrequencyTable::IsRare(std::string_view word, Count threshold) const {
  if (IsPunctOrDigits(word)) return false;
  return Frequency(word) < threshold;
}

FrequencyTable ReadFrequencyTable(std::istream& in) {
  FrequencyTable table;
  ForEachResourceLine(in, [&](std::size_t line, std::string_view text) {
    const std::size_t space = text.find_first_of(" \t");
    const std::string_view word = text.substr(0, space);
    if (word.empty()) throw LineError(line, "empty word");
    if (space == std::string_view::npos) throw LineError(line, "invalid count");
    const std::string_view field = Trim(text.substr(space + 1));
    Count count = 0;
    const auto [end, ec] =
        std::from_chars(field.data(), field.data() + field.size(), count);
    if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
      throw LineError(line, "invalid count");
    }
    table.Add(word, count);
  });
  if (table.empty()) throw FormatError("frequency list has no entries");
  return table;
}

FrequencyTable LoadFrequencyTable(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open frequency list: " + path);
  return ReadFrequencyTable(in);
}

}  // namespace lexsimp
