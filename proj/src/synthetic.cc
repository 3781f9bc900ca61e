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

#include "lexsimp/synthetic.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "lexsimp/rng.h"

namespace lexsimp {
namespace {

constexpr char kConsonants[] = "bcdfghjklmnprstvwz";
constexpr char kVowels[] = "aeiou";

// Pronounceable CVCV... strings of 2-4 syllables.
std::string RandomWord(Rng& rng) {
  const std::size_t syllables = 2 + rng.Below(3);
  std::string word;
  for (std::size_t s = 0; s < syllables; ++s) {
    word.push_back(kConsonants[rng.Below(sizeof(kConsonants) - 1)]);
    word.push_back(kVowels[rng.Below(sizeof(kVowels) - 1)]);
  }
  return word;
}

const char* ClusterTag(Rng& rng) {
  const double u = rng.Uniform01();
  if (u < 0.5) return "NN";
  if (u < 0.8) return "VB";
  return "JJ";
}

}  // namespace

SyntheticWorld MakeSyntheticWorld(const SyntheticConfig& cfg) {
  if (cfg.vocab == 0 || cfg.dim == 0 || cfg.cluster_size == 0) {
    throw std::invalid_argument("synthetic sizes must be positive");
  }
  Rng rng(cfg.seed);
  SyntheticWorld world;
  std::unordered_set<std::string> seen;
  while (world.vocabulary.size() < cfg.vocab) {
    std::string word = RandomWord(rng);
    if (seen.insert(word).second) world.vocabulary.push_back(std::move(word));
  }

  Resources& res = world.resources;
  for (std::size_t r = 0; r < cfg.vocab; ++r) {
    res.frequency.Add(world.vocabulary[r],
                      std::max<Count>(1, cfg.top_count / static_cast<Count>(r + 1)));
  }

  // Cluster membership is a random permutation so that clusters mix
  // frequent and rare words.
  std::vector<std::size_t> order(cfg.vocab);
  for (std::size_t i = 0; i < cfg.vocab; ++i) order[i] = i;
  for (std::size_t i = cfg.vocab - 1; i > 0; --i) {
    std::swap(order[i], order[rng.Below(i + 1)]);
  }
  res.embeddings = EmbeddingTable(cfg.dim);
  std::vector<double> center(cfg.dim);
  std::vector<double> row(cfg.dim);
  const char* tag = "NN";
  for (std::size_t i = 0; i < cfg.vocab; ++i) {
    if (i % cfg.cluster_size == 0) {
      for (double& x : center) x = rng.Normal();
      tag = ClusterTag(rng);
    }
    for (std::size_t d = 0; d < cfg.dim; ++d) row[d] = center[d] + 0.6 * rng.Normal();
    const std::string& word = world.vocabulary[order[i]];
    res.embeddings.Add(word, row);
    res.lexicons.tag_lexicon.emplace(word, tag);
  }
  return world;
}

std::vector<std::string> MakeSyntheticSentences(
    const std::vector<std::string>& vocabulary, std::size_t count,
    std::size_t min_len, std::size_t max_len, std::uint64_t seed) {
  if (vocabulary.empty() || min_len == 0 || max_len < min_len) {
    throw std::invalid_argument("invalid synthetic sentence parameters");
  }
  std::vector<double> cdf(vocabulary.size());
  double total = 0.0;
  for (std::size_t r = 0; r < vocabulary.size(); ++r) {
    total += 1.0 / static_cast<double>(r + 1);
    cdf[r] = total;
  }
  Rng rng(seed);
  std::vector<std::string> sentences;
  sentences.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t len = min_len + rng.Below(max_len - min_len + 1);
    std::string text;
    for (std::size_t w = 0; w < len; ++w) {
      const double u = rng.Uniform01() * total;
      const std::size_t r = std::min<std::size_t>(
          std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin(), cdf.size() - 1);
      if (!text.empty()) text.push_back(' ');
      text += vocabulary[r];
    }
    text += " .";
    sentences.push_back(std::move(text));
  }
  return sentences;
}

}  // namespace lexsimp
