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

// Seeded synthetic resources and text at realistic scale, for benchmarks
// and load tests where real vectors are unavailable.

#ifndef LEXSIMP_SYNTHETIC_H_
#define LEXSIMP_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lexsimp/resources.h"

namespace lexsimp {

struct SyntheticConfig {
  std::size_t vocab = 50000;
  std::size_t dim = 300;
  // Words per embedding cluster; a cluster shares one POS tag.
  std::size_t cluster_size = 50;
  // Count of the rank-1 word; rank r gets top_count / r.
  Count top_count = 10'000'000;
  std::uint64_t seed = 1;
};

struct SyntheticWorld {
  Resources resources;
  // Vocabulary by frequency rank, most frequent first.
  std::vector<std::string> vocabulary;
};

SyntheticWorld MakeSyntheticWorld(const SyntheticConfig& cfg);

// Sentences of min_len..max_len words drawn by Zipf rank, each ending in ".".
std::vector<std::string> MakeSyntheticSentences(
    const std::vector<std::string>& vocabulary, std::size_t count,
    std::size_t min_len, std::size_t max_len, std::uint64_t seed);

}  // namespace lexsimp

#endif  // LEXSIMP_SYNTHETIC_H_
