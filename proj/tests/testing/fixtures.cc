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


#include "testing/fixtures.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace lexsimp::testing {

std::string SourcePath(const std::string& relative) {
  return std::string(LEXSIMP_SOURCE_DIR) + "/" + relative;
}

ResourcePaths FixturePaths() {
  return {SourcePath("data/fixture/freq.txt"), SourcePath("data/fixture/emb.txt"),
          SourcePath("data/fixture/tags.txt"), SourcePath("data/fixture/noun_exc.txt"),
          SourcePath("data/fixture/verb_exc.txt")};
}

const Resources& FixtureResources() {
  static const Resources* resources = new Resources(LoadResources(FixturePaths()));
  return *resources;
}

EmbeddingTable MakeTable(
    const std::vector<std::pair<std::string, std::vector<double>>>& rows) {
  EmbeddingTable table(rows.empty() ? 0 : rows.front().second.size());
  for (const auto& [word, values] : rows) table.Add(word, values);
  return table;
}

Resources FixtureWith(std::vector<std::pair<std::string, std::vector<double>>> rows) {
  ResourcePaths paths = FixturePaths();
  paths.embeddings.clear();
  Resources resources = LoadResources(paths);
  resources.embeddings = MakeTable(rows);
  return resources;
}

EmbeddingTable RandomIntegerTable(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> words(2, 1000);
  std::uniform_int_distribution<std::size_t> dims(1, 16);
  std::uniform_int_distribution<int> coord(-2, 2);
  const std::size_t n = words(rng);
  const std::size_t d = dims(rng);
  EmbeddingTable table(d);
  std::vector<double> row(d);
  for (std::size_t i = 0; table.size() < n; ++i) {
    bool nonzero = false;
    for (double& x : row) {
      x = coord(rng);
      nonzero = nonzero || x != 0.0;
    }
    if (!nonzero) row[0] = 1.0;
    table.Add("w" + std::to_string((i * 7919) % 100003), row);
  }
  return table;
}

std::vector<Neighbor> BruteForceTopK(const EmbeddingTable& table, std::size_t query,
                                     std::size_t k) {
  const auto q = table.Row(query);
  std::vector<Neighbor> all;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i == query) continue;
    const auto r = table.Row(i);
    double dot = 0.0;
    for (std::size_t d = 0; d < table.dim(); ++d) {
      dot += static_cast<double>(q[d]) * static_cast<double>(r[d]);
    }
    all.push_back({static_cast<std::uint32_t>(i), std::clamp(dot, -1.0, 1.0)});
  }
  std::sort(all.begin(), all.end(), [&](const Neighbor& a, const Neighbor& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return table.Word(a.index) < table.Word(b.index);
  });
  if (all.size() > k) all.resize(k);
  return all;
}

std::vector<std::string> RandomFixtureSentences(std::size_t count, std::uint64_t seed) {
  static const std::vector<std::string> kWords = {
      "the", "a", "The", "A", "cat", "cats", "Cats", "dog", "dogs", "feline",
      "felines", "Felines", "canine", "canines", "film", "films", "movie",
      "movies", "run", "runs", "ran", "running", "buy", "bought", "purchase",
      "purchased", "purchases", "acquire", "acquired", "is", "was", "great",
      "London", "mice", "mouse", "to", "quickly", "42", ",", ".", "!"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, kWords.size() - 1);
  std::vector<std::string> out;
  for (std::size_t s = 0; s < count; ++s) {
    std::string text;
    for (std::size_t i = len(rng); i > 0; --i) {
      if (!text.empty()) text.push_back(' ');
      text += kWords[pick(rng)];
    }
    out.push_back(std::move(text));
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lexsimp::testing
