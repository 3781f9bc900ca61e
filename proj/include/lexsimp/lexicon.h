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

#ifndef LEXSIMP_LEXICON_H_
#define LEXSIMP_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>

#include "lexsimp/text.h"

namespace lexsimp {

using Count = std::uint64_t;

// Word -> corpus occurrence count. Keys are stored lowercase; absent words
// have count 0.
class FrequencyTable {
 public:
  // Lowercases `word` and keeps the larger count on collision.
  void Add(std::string_view word, Count count);

  Count Frequency(std::string_view word) const;
  bool Contains(std::string_view word) const;

  // frequency(word) < threshold. Words made only of punctuation and digits
  // are never rare.
  bool IsRare(std::string_view word, Count threshold) const;

  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  Count max_count() const { return max_count_; }

 private:
  StringMap<Count> counts_;
  Count max_count_ = 0;
};

// Parses `word<SPACE>count` lines; '#' lines and blank lines are ignored.
FrequencyTable ReadFrequencyTable(std::istream& in);
FrequencyTable LoadFrequencyTable(const std::string& path);

}  // namespace lexsimp

#endif  // LEXSIMP_LEXICON_H_
