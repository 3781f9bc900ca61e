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

#ifndef LEXSIMP_EMBEDDINGS_H_
#define LEXSIMP_EMBEDDINGS_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexsimp/lexicon.h"
#include "lexsimp/morphology.h"
#include "lexsimp/text.h"

namespace lexsimp {

struct Neighbor {
  std::uint32_t index = 0;
  double similarity = 0.0;

  bool operator==(const Neighbor&) const = default;
};

// Word -> unit-length float vector. Similarities are exact dot products
// accumulated in double in coordinate order, so every query path (single,
// batched, cached) reports bit-identical values and orderings.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  explicit EmbeddingTable(std::size_t dim) : dim_(dim) {}

  // L2-normalizes and appends `values` under the lowercased word. Returns
  // false (and stores nothing) when the word is already present. Throws
  // std::invalid_argument on a dimension mismatch, a non-finite value or a
  // zero vector.
  bool Add(std::string_view word, std::span<const double> values);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  std::optional<std::size_t> Find(std::string_view word) const;
  const std::string& Word(std::size_t index) const { return words_[index]; }
  std::span<const float> Row(std::size_t index) const {
    return {data_.data() + index * dim_, dim_};
  }

  // Cosine of two stored rows: the double sum of exact float products in
  // index order, clamped to [-1, 1].
  double Similarity(std::size_t a, std::size_t b) const;

  // The k most similar rows to `index`, excluding `index` itself, by
  // descending similarity with ties broken by ascending word.
  std::vector<Neighbor> Nearest(std::size_t index, std::size_t k) const;
  std::vector<std::vector<Neighbor>> NearestBatch(
      std::span<const std::size_t> queries, std::size_t k) const;

  // Tables with fewer rows are scanned exactly without the float pruning
  // pass. Exposed so tests can drive the pruned path on small tables.
  void set_prune_min_rows(std::size_t rows) { prune_min_rows_ = rows; }

 private:
  std::vector<Neighbor> ExactScan(std::size_t query, std::size_t k) const;
  struct Candidate {
    std::uint32_t index;
    float score;
  };
  std::vector<Neighbor> Rescore(std::size_t query,
                                std::span<const Candidate> candidates,
                                float kth_best, std::size_t m) const;
  void SortAndTruncate(std::vector<Neighbor>& neighbors, std::size_t k) const;

  std::size_t dim_ = 0;
  std::vector<std::string> words_;
  StringMap<std::uint32_t> index_;
  std::vector<float> data_;
  std::size_t prune_min_rows_ = 2048;
};

// Text format: `word v1 ... vd` per line with an optional leading `N d`
// header. Duplicate words keep their first vector.
EmbeddingTable ReadEmbeddings(std::istream& in);
EmbeddingTable LoadEmbeddings(const std::string& path);

struct SynonymCandidate {
  std::string word;
  double similarity = 0.0;
  Count frequency = 0;
  std::optional<std::string> fine_tag;
};

// Top-k neighbors of `word`; empty when the word has no vector. Frequency
// and tag are filled in when the tables are supplied.
std::vector<SynonymCandidate> TopKSynonyms(const EmbeddingTable& table,
                                           std::string_view word, std::size_t k,
                                           const FrequencyTable* freq = nullptr,
                                           const MorphLexicons* lex = nullptr);

// Thread-safe memo of exact neighbor lists. An entry computed for k serves
// every k' <= k since shorter lists are prefixes of longer ones.
class NeighborCache {
 public:
  explicit NeighborCache(const EmbeddingTable& table) : table_(table) {}
  NeighborCache(const NeighborCache&) = delete;
  NeighborCache& operator=(const NeighborCache&) = delete;

  std::vector<Neighbor> Get(std::size_t index, std::size_t k);
  // Fills every missing entry among `indices` with one batched pass.
  void Prefetch(std::span<const std::size_t> indices, std::size_t k);

  std::size_t size() const;
  const EmbeddingTable& table() const { return table_; }

 private:
  bool Covers(const std::vector<Neighbor>& entry, std::size_t k) const;

  const EmbeddingTable& table_;
  mutable std::shared_mutex mu_;
  std::unordered_map<std::size_t, std::vector<Neighbor>> entries_;
};

}  // namespace lexsimp

#endif  // LEXSIMP_EMBEDDINGS_H_
