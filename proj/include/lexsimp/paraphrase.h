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

// Baseline paraphrasers: random synonym replacement and cutoff (random
// token deletion). Both are deterministic functions of (input, config,
// seed); see Rng for the pinned random stream.

#ifndef LEXSIMP_PARAPHRASE_H_
#define LEXSIMP_PARAPHRASE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexsimp/embeddings.h"
#include "lexsimp/morphology.h"
#include "lexsimp/resources.h"

namespace lexsimp {

enum class ParaphraseMethod { kRandomReplace, kCutoff };

ParaphraseMethod ParseParaphraseMethod(std::string_view name);
std::string_view ParaphraseMethodName(ParaphraseMethod method);

struct ParaphraseConfig {
  ParaphraseMethod method = ParaphraseMethod::kRandomReplace;
  std::size_t k = 1;      // positions to replace (random_replace)
  double p = 0.1;         // per-token deletion probability (cutoff)
  std::uint64_t seed = 0;
  std::size_t n_s = 10;   // candidate pool (random_replace)

  // Throws std::invalid_argument when p is outside [0, 1] or n_s is 0.
  void Validate() const;
};

// Seed for the example with ordinal `id` in a batch run, so output does not
// depend on scheduling.
inline std::uint64_t SentenceSeed(std::uint64_t seed, std::uint64_t id) {
  return seed ^ id;
}

// Picks min(k, |eligible|) distinct positions among alphabetic,
// non-proper-noun tokens with a vector, and replaces each with a uniformly
// chosen same-POS word from its n_s nearest neighbors. Uses cfg.seed.
std::string RandomReplace(std::string_view sentence, const ParaphraseConfig& cfg,
                          const EmbeddingTable& emb, const MorphLexicons& lex);

// Deletes each token with probability cfg.p; keeps the first token if every
// token would go. Uses cfg.seed.
std::string Cutoff(std::string_view sentence, const ParaphraseConfig& cfg);

class Paraphraser {
 public:
  Paraphraser(const EmbeddingTable& emb, const MorphLexicons& lex,
              ParaphraseConfig cfg, NeighborCache* shared_cache = nullptr);
  Paraphraser(const Resources& resources, ParaphraseConfig cfg,
              NeighborCache* shared_cache = nullptr);

  const ParaphraseConfig& config() const { return cfg_; }

  std::string Paraphrase(std::string_view sentence, std::uint64_t seed) const;

  // Sentence i is paraphrased with SentenceSeed(cfg.seed, ids[i]).
  std::vector<std::string> ParaphraseBatch(std::span<const std::string> sentences,
                                           std::span<const std::size_t> ids,
                                           std::size_t threads = 1) const;

 private:
  struct Plan;
  Plan MakePlan(std::string_view sentence, std::uint64_t seed) const;
  std::string Finish(Plan& plan) const;

  const EmbeddingTable& emb_;
  const MorphLexicons& lex_;
  ParaphraseConfig cfg_;
  std::unique_ptr<NeighborCache> owned_cache_;
  NeighborCache* cache_;
};

}  // namespace lexsimp

#endif  // LEXSIMP_PARAPHRASE_H_
