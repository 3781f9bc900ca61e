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

// Lexical simplification: lemmatize nouns and verbs, then swap each rare
// word for its most frequent same-POS neighbor among the n_s nearest
// embedding neighbors.

#ifndef LEXSIMP_SIMPLIFY_H_
#define LEXSIMP_SIMPLIFY_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexsimp/embeddings.h"
#include "lexsimp/lexicon.h"
#include "lexsimp/morphology.h"
#include "lexsimp/resources.h"

namespace lexsimp {

enum class SimplifyMode {
  kLrls,   // lemmatize, then replace rare words
  kLemma,  // lemmatize only
  kRr,     // replace rare words only
  kNone,   // identity
};

SimplifyMode ParseSimplifyMode(std::string_view name);
std::string_view SimplifyModeName(SimplifyMode mode);

struct SimplifyConfig {
  Count n_f = 1000;       // rarity threshold: frequency < n_f is rare
  std::size_t n_s = 10;   // synonym candidates per rare word
  SimplifyMode mode = SimplifyMode::kLrls;
  bool require_gain = true;  // replacement must be strictly more frequent
  bool preserve_case = true;

  // Throws std::invalid_argument when n_s is 0.
  void Validate() const;
};

struct Replacement {
  std::size_t position = 0;
  std::string original;
  std::string replacement;
  Count original_freq = 0;
  Count replacement_freq = 0;
  double similarity = 0.0;

  bool operator==(const Replacement&) const = default;
};

struct SimplifyResult {
  std::vector<Token> tokens;
  std::string text;  // token surfaces joined by single spaces
  std::vector<Replacement> replacements;
  std::size_t lemma_changes = 0;

  bool operator==(const SimplifyResult&) const = default;
};

// True when `candidate` carries a tag-lexicon tag whose coarse class matches
// the token's and differs from the token's key.
bool PosCompatible(const Token& token, std::string_view candidate,
                   const MorphLexicons& lex);

// Decides the replacement for a single tagged token, or nullopt when the
// token is exempt, not rare, has no vector, or no candidate survives.
std::optional<Replacement> CandidateReplacement(const Token& token,
                                                const SimplifyConfig& cfg,
                                                const FrequencyTable& freq,
                                                const EmbeddingTable& emb,
                                                const MorphLexicons& lex);

SimplifyResult SimplifySentence(std::string_view sentence,
                                const SimplifyConfig& cfg,
                                const FrequencyTable& freq,
                                const EmbeddingTable& emb,
                                const MorphLexicons& lex);

// Wall time spent per pipeline stage, in seconds. Tokenization is counted
// under `tag`; frequency lookups, filtering and assembly under `lookup`;
// neighbor retrieval under `topk`.
struct StageTimes {
  double tag = 0.0;
  double lemma = 0.0;
  double lookup = 0.0;
  double topk = 0.0;

  double total() const { return tag + lemma + lookup + topk; }
  StageTimes& operator+=(const StageTimes& other);
};

// Reusable pipeline over shared resources. Neighbor lists are memoized in a
// NeighborCache (owned, or shared between several simplifiers), and batches
// resolve all their neighbor queries in one pass over the embedding table.
// Results never depend on batching, caching or thread count.
class Simplifier {
 public:
  Simplifier(const FrequencyTable& freq, const EmbeddingTable& emb,
             const MorphLexicons& lex, SimplifyConfig cfg,
             NeighborCache* shared_cache = nullptr);
  Simplifier(const Resources& resources, SimplifyConfig cfg,
             NeighborCache* shared_cache = nullptr);

  const SimplifyConfig& config() const { return cfg_; }

  SimplifyResult Simplify(std::string_view sentence) const;

  // Output order equals input order.
  std::vector<SimplifyResult> SimplifyBatch(std::span<const std::string> sentences,
                                            std::size_t threads = 1,
                                            StageTimes* times = nullptr) const;

  // Tokenize and tag, plus lemmatization when the mode includes it.
  std::vector<Token> Analyze(std::string_view sentence,
                             std::size_t* lemma_changes = nullptr) const;

  // The rare-word replacement step over tagged tokens, regardless of mode.
  // Tokens are rewritten in place.
  std::vector<Replacement> ReplaceRareWords(std::vector<Token>& tokens) const;

  // Embedding row to query for `token`, or nullopt when the token is exempt,
  // not rare, or has no vector.
  std::optional<std::size_t> LookupIndex(const Token& token) const;

  // Resolves neighbor lists for every lookup in `sentences` up front.
  void Prefetch(std::span<const std::vector<Token>> sentences) const;

 private:
  std::optional<Replacement> Choose(const Token& token, std::size_t row) const;
  void ProcessChunk(std::span<const std::string> sentences,
                    std::span<SimplifyResult> out, StageTimes* times) const;

  const FrequencyTable& freq_;
  const EmbeddingTable& emb_;
  const MorphLexicons& lex_;
  SimplifyConfig cfg_;
  std::unique_ptr<NeighborCache> owned_cache_;
  NeighborCache* cache_;
};

// Counters over a set of results.
struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  // Tokens containing a letter; replaced positions always count.
  std::size_t alphabetic_tokens = 0;
  std::size_t lemma_changes = 0;
  std::size_t replacements = 0;
  double similarity_sum = 0.0;
  double log_gain_sum = 0.0;

  void Add(const SimplifyResult& result);

  double replaced_fraction() const;
  double lemma_fraction() const;
  double mean_similarity() const;
  // Mean log10(max(replacement_freq, 1) / max(original_freq, 1)).
  double mean_freq_gain() const;
};

}  // namespace lexsimp

#endif  // LEXSIMP_SIMPLIFY_H_
