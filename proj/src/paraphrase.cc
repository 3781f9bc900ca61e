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

#include "lexsimp/paraphrase.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "lexsimp/parallel.h"
#include "lexsimp/rng.h"
#include "lexsimp/simplify.h"

namespace lexsimp {
namespace {

constexpr std::size_t kChunkSize = 256;

std::string JoinSurfaces(const std::vector<Token>& tokens) {
  std::string text;
  for (const Token& token : tokens) {
    if (!text.empty()) text.push_back(' ');
    text += token.surface;
  }
  return text;
}

std::string CutoffWithSeed(std::string_view sentence, double p,
                           std::uint64_t seed) {
  const std::vector<Token> tokens = Tokenize(sentence);
  if (tokens.empty()) return {};
  Rng rng(seed);
  std::string text;
  for (const Token& token : tokens) {
    if (rng.Uniform01() < p) continue;
    if (!text.empty()) text.push_back(' ');
    text += token.surface;
  }
  return text.empty() ? tokens.front().surface : text;
}

}  // namespace

ParaphraseMethod ParseParaphraseMethod(std::string_view name) {
  if (name == "random_replace") return ParaphraseMethod::kRandomReplace;
  if (name == "cutoff") return ParaphraseMethod::kCutoff;
  throw std::invalid_argument("unknown paraphrase method '" + std::string(name) +
                              "' (expected random_replace or cutoff)");
}

std::string_view ParaphraseMethodName(ParaphraseMethod method) {
  return method == ParaphraseMethod::kCutoff ? "cutoff" : "random_replace";
}

void ParaphraseConfig::Validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  if (n_s == 0) throw std::invalid_argument("n_s must be at least 1");
}

struct Paraphraser::Plan {
  std::vector<Token> tokens;
  // (position, embedding row), ascending by position.
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  Rng rng{0};
};

Paraphraser::Paraphraser(const EmbeddingTable& emb, const MorphLexicons& lex,
                         ParaphraseConfig cfg, NeighborCache* shared_cache)
    : emb_(emb), lex_(lex), cfg_(cfg) {
  cfg_.Validate();
  if (shared_cache != nullptr) {
    cache_ = shared_cache;
  } else {
    owned_cache_ = std::make_unique<NeighborCache>(emb_);
    cache_ = owned_cache_.get();
  }
}

Paraphraser::Paraphraser(const Resources& resources, ParaphraseConfig cfg,
                         NeighborCache* shared_cache)
    : Paraphraser(resources.embeddings, resources.lexicons, cfg, shared_cache) {}

Paraphraser::Plan Paraphraser::MakePlan(std::string_view sentence,
                                        std::uint64_t seed) const {
  Plan plan;
  plan.rng = Rng(seed);
  plan.tokens = Tokenize(sentence);
  TagTokens(plan.tokens, lex_);
  std::vector<std::pair<std::size_t, std::size_t>> eligible;
  for (const Token& token : plan.tokens) {
    if (!IsAlphabetic(token.surface) || token.coarse_tag == CoarseTag::kProperNoun) {
      continue;
    }
    if (const auto row = emb_.Find(token.key)) eligible.emplace_back(token.position, *row);
  }
  // Partial Fisher-Yates: the first m slots become a uniform m-subset.
  const std::size_t m = std::min(cfg_.k, eligible.size());
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = i + plan.rng.Below(eligible.size() - i);
    std::swap(eligible[i], eligible[j]);
  }
  eligible.resize(m);
  std::sort(eligible.begin(), eligible.end());
  plan.chosen = std::move(eligible);
  return plan;
}

std::string Paraphraser::Finish(Plan& plan) const {
  for (const auto& [position, row] : plan.chosen) {
    Token& token = plan.tokens[position];
    std::vector<std::size_t> pool;
    for (const Neighbor& n : cache_->Get(row, cfg_.n_s)) {
      if (PosCompatible(token, emb_.Word(n.index), lex_)) pool.push_back(n.index);
    }
    if (pool.empty()) continue;
    const std::string& word = emb_.Word(pool[plan.rng.Below(pool.size())]);
    token.surface = StartsUpper(token.surface) ? CapitalizeFirst(word) : word;
    token.key = word;
  }
  return JoinSurfaces(plan.tokens);
}

std::string Paraphraser::Paraphrase(std::string_view sentence,
                                    std::uint64_t seed) const {
  if (cfg_.method == ParaphraseMethod::kCutoff) {
    return CutoffWithSeed(sentence, cfg_.p, seed);
  }
  Plan plan = MakePlan(sentence, seed);
  return Finish(plan);
}

std::vector<std::string> Paraphraser::ParaphraseBatch(
    std::span<const std::string> sentences, std::span<const std::size_t> ids,
    std::size_t threads) const {
  if (ids.size() != sentences.size()) {
    throw std::invalid_argument("ids and sentences differ in length");
  }
  std::vector<std::string> out(sentences.size());
  const std::size_t chunks = (sentences.size() + kChunkSize - 1) / kChunkSize;
  ParallelFor(chunks, threads, [&](std::size_t c) {
    const std::size_t begin = c * kChunkSize;
    const std::size_t end = std::min(sentences.size(), begin + kChunkSize);
    if (cfg_.method == ParaphraseMethod::kCutoff) {
      for (std::size_t i = begin; i < end; ++i) {
        out[i] = CutoffWithSeed(sentences[i], cfg_.p, SentenceSeed(cfg_.seed, ids[i]));
      }
      return;
    }
    std::vector<Plan> plans;
    std::vector<std::size_t> rows;
    for (std::size_t i = begin; i < end; ++i) {
      plans.push_back(MakePlan(sentences[i], SentenceSeed(cfg_.seed, ids[i])));
      for (const auto& chosen : plans.back().chosen) rows.push_back(chosen.second);
    }
    if (rows.size() > 1) cache_->Prefetch(rows, cfg_.n_s);
    for (std::size_t i = begin; i < end; ++i) out[i] = Finish(plans[i - begin]);
  });
  return out;
}

std::string RandomReplace(std::string_view sentence, const ParaphraseConfig& cfg,
                          const EmbeddingTable& emb, const MorphLexicons& lex) {
  ParaphraseConfig replace = cfg;
  replace.method = ParaphraseMethod::kRandomReplace;
  return Paraphraser(emb, lex, replace).Paraphrase(sentence, cfg.seed);
}

std::string Cutoff(std::string_view sentence, const ParaphraseConfig& cfg) {
  cfg.Validate();
  return CutoffWithSeed(sentence, cfg.p, cfg.seed);
}

}  // namespace lexsimp
