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

#include "lexsimp/simplify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "lexsimp/parallel.h"

namespace lexsimp {
namespace {

constexpr std::size_t kChunkSize = 256;

bool Lemmatizes(SimplifyMode mode) {
  return mode == SimplifyMode::kLrls || mode == SimplifyMode::kLemma;
}

bool Replaces(SimplifyMode mode) {
  return mode == SimplifyMode::kLrls || mode == SimplifyMode::kRr;
}

bool IsExempt(CoarseTag tag) {
  return tag == CoarseTag::kPunct || tag == CoarseTag::kNumber ||
         tag == CoarseTag::kProperNoun;
}

// Highest frequency wins, then higher similarity, then the smaller word.
std::optional<Replacement> ChooseFrom(const Token& token,
                                      std::span<const Neighbor> neighbors,
                                      const SimplifyConfig& cfg,
                                      const FrequencyTable& freq,
                                      const EmbeddingTable& emb,
                                      const MorphLexicons& lex) {
  const Neighbor* best = nullptr;
  Count best_freq = 0;
  for (const Neighbor& n : neighbors) {
    const std::string& word = emb.Word(n.index);
    if (!PosCompatible(token, word, lex)) continue;
    const Count f = freq.Frequency(word);
    bool better = best == nullptr || f > best_freq;
    if (!better && f == best_freq) {
      better = n.similarity > best->similarity ||
               (n.similarity == best->similarity && word < emb.Word(best->index));
    }
    if (better) {
      best = &n;
      best_freq = f;
    }
  }
  if (best == nullptr) return std::nullopt;
  const Count own = freq.Frequency(token.key);
  if (cfg.require_gain && best_freq <= own) return std::nullopt;

  Replacement r;
  r.position = token.position;
  r.original = token.surface;
  const std::string& word = emb.Word(best->index);
  r.replacement = cfg.preserve_case && StartsUpper(token.surface)
                      ? CapitalizeFirst(word)
                      : word;
  r.original_freq = own;
  r.replacement_freq = best_freq;
  r.similarity = best->similarity;
  return r;
}

void Apply(const Replacement& r, std::vector<Token>& tokens) {
  Token& token = tokens[r.position];
  token.surface = r.replacement;
  token.key = ToLower(r.replacement);
}

std::string JoinSurfaces(const std::vector<Token>& tokens) {
  std::string text;
  for (const Token& token : tokens) {
    if (!text.empty()) text.push_back(' ');
    text += token.surface;
  }
  return text;
}

}  // namespace

SimplifyMode ParseSimplifyMode(std::string_view name) {
  if (name == "lrls") return SimplifyMode::kLrls;
  if (name == "lemma") return SimplifyMode::kLemma;
  if (name == "rr") return SimplifyMode::kRr;
  if (name == "none") return SimplifyMode::kNone;
  throw std::invalid_argument("unknown simplify mode '" + std::string(name) +
                              "' (expected lrls, lemma, rr or none)");
}

std::string_view SimplifyModeName(SimplifyMode mode) {
  switch (mode) {
    case SimplifyMode::kLrls:
      return "lrls";
    case SimplifyMode::kLemma:
      return "lemma";
    case SimplifyMode::kRr:
      return "rr";
    case SimplifyMode::kNone:
      return "none";
  }
  return "?";
}

void SimplifyConfig::Validate() const {
  if (n_s == 0) throw std::invalid_argument("n_s must be at least 1");
}

bool PosCompatible(const Token& token, std::string_view candidate,
                   const MorphLexicons& lex) {
  if (candidate == token.key) return false;
  const std::string* tag = lex.TagOf(candidate);
  return tag != nullptr && CoarseTagOf(*tag) == token.coarse_tag;
}

std::optional<Replacement> CandidateReplacement(const Token& token,
                                                const SimplifyConfig& cfg,
                                                const FrequencyTable& freq,
                                                const EmbeddingTable& emb,
                                                const MorphLexicons& lex) {
  cfg.Validate();
  if (IsExempt(token.coarse_tag) || !freq.IsRare(token.key, cfg.n_f)) {
    return std::nullopt;
  }
  const auto row = emb.Find(token.key);
  if (!row) return std::nullopt;
  const std::vector<Neighbor> neighbors = emb.Nearest(*row, cfg.n_s);
  return ChooseFrom(token, neighbors, cfg, freq, emb, lex);
}

SimplifyResult SimplifySentence(std::string_view sentence,
                                const SimplifyConfig& cfg,
                                const FrequencyTable& freq,
                                const EmbeddingTable& emb,
                                const MorphLexicons& lex) {
  return Simplifier(freq, emb, lex, cfg).Simplify(sentence);
}

StageTimes& StageTimes::operator+=(const StageTimes& other) {
  tag += other.tag;
  lemma += other.lemma;
  lookup += other.lookup;
  topk += other.topk;
  return *this;
}

Simplifier::Simplifier(const FrequencyTable& freq, const EmbeddingTable& emb,
                       const MorphLexicons& lex, SimplifyConfig cfg,
                       NeighborCache* shared_cache)
    : freq_(freq), emb_(emb), lex_(lex), cfg_(cfg) {
  cfg_.Validate();
  if (shared_cache != nullptr) {
    if (&shared_cache->table() != &emb_) {
      throw std::invalid_argument("neighbor cache belongs to another table");
    }
    cache_ = shared_cache;
  } else {
    owned_cache_ = std::make_unique<NeighborCache>(emb_);
    cache_ = owned_cache_.get();
  }
}

Simplifier::Simplifier(const Resources& resources, SimplifyConfig cfg,
                       NeighborCache* shared_cache)
    : Simplifier(resources.frequency, resources.embeddings, resources.lexicons,
                 cfg, shared_cache) {}

std::vector<Token> Simplifier::Analyze(std::string_view sentence,
                                       std::size_t* lemma_changes) const {
  std::vector<Token> tokens = Tokenize(sentence);
  TagTokens(tokens, lex_);
  std::size_t changed = 0;
  if (Lemmatizes(cfg_.mode)) {
    changed = LemmatizeSentence(tokens, lex_, freq_, cfg_.preserve_case);
  }
  if (lemma_changes != nullptr) *lemma_changes = changed;
  return tokens;
}

std::optional<std::size_t> Simplifier::LookupIndex(const Token& token) const {
  if (IsExempt(token.coarse_tag) || !freq_.IsRare(token.key, cfg_.n_f)) {
    return std::nullopt;
  }
  return emb_.Find(token.key);
}

std::optional<Replacement> Simplifier::Choose(const Token& token,
                                              std::size_t row) const {
  const std::vector<Neighbor> neighbors = cache_->Get(row, cfg_.n_s);
  return ChooseFrom(token, neighbors, cfg_, freq_, emb_, lex_);
}

std::vector<Replacement> Simplifier::ReplaceRareWords(
    std::vector<Token>& tokens) const {
  // Every decision reads the pre-replacement sequence; replacements never
  // cascade.
  std::vector<Replacement> replacements;
  for (const Token& token : tokens) {
    if (const auto row = LookupIndex(token)) {
      if (auto r = Choose(token, *row)) replacements.push_back(std::move(*r));
    }
  }
  for (const Replacement& r : replacements) Apply(r, tokens);
  return replacements;
}

void Simplifier::Prefetch(std::span<const std::vector<Token>> sentences) const {
  std::vector<std::size_t> rows;
  for (const auto& tokens : sentences) {
    for (const Token& token : tokens) {
      if (const auto row = LookupIndex(token)) rows.push_back(*row);
    }
  }
  cache_->Prefetch(rows, cfg_.n_s);
}

SimplifyResult Simplifier::Simplify(std::string_view sentence) const {
  const std::string owned(sentence);
  SimplifyResult result;
  ProcessChunk(std::span<const std::string>(&owned, 1),
               std::span<SimplifyResult>(&result, 1), nullptr);
  return result;
}

void Simplifier::ProcessChunk(std::span<const std::string> sentences,
                              std::span<SimplifyResult> out,
                              StageTimes* times) const {
  using Clock = std::chrono::steady_clock;
  auto mark = times ? Clock::now() : Clock::time_point{};
  auto lap = [&](double StageTimes::*slot) {
    if (times == nullptr) return;
    const auto now = Clock::now();
    times->*slot += std::chrono::duration<double>(now - mark).count();
    mark = now;
  };

  for (std::size_t i = 0; i < sentences.size(); ++i) {
    out[i] = SimplifyResult{};
    out[i].tokens = Tokenize(sentences[i]);
    TagTokens(out[i].tokens, lex_);
  }
  lap(&StageTimes::tag);

  if (Lemmatizes(cfg_.mode)) {
    for (SimplifyResult& result : out) {
      result.lemma_changes =
          LemmatizeSentence(result.tokens, lex_, freq_, cfg_.preserve_case);
    }
    lap(&StageTimes::lemma);
  }

  if (Replaces(cfg_.mode)) {
    struct Lookup {
      std::size_t sentence;
      std::size_t token;
      std::size_t row;
    };
    std::vector<Lookup> lookups;
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < out.size(); ++i) {
      const auto& tokens = out[i].tokens;
      for (std::size_t j = 0; j < tokens.size(); ++j) {
        if (const auto row = LookupIndex(tokens[j])) {
          lookups.push_back({i, j, *row});
          rows.push_back(*row);
        }
      }
    }
    lap(&StageTimes::lookup);
    if (rows.size() > 1) cache_->Prefetch(rows, cfg_.n_s);
    lap(&StageTimes::topk);
    for (const Lookup& l : lookups) {
      if (auto r = Choose(out[l.sentence].tokens[l.token], l.row)) {
        out[l.sentence].replacements.push_back(std::move(*r));
      }
    }
    for (SimplifyResult& result : out) {
      for (const Replacement& r : result.replacements) Apply(r, result.tokens);
    }
  }

  for (SimplifyResult& result : out) result.text = JoinSurfaces(result.tokens);
  lap(&StageTimes::lookup);
}

std::vector<SimplifyResult> Simplifier::SimplifyBatch(
    std::span<const std::string> sentences, std::size_t threads,
    StageTimes* times) const {
  std::vector<SimplifyResult> results(sentences.size());
  const std::size_t chunks = (sentences.size() + kChunkSize - 1) / kChunkSize;
  std::vector<StageTimes> chunk_times(times ? chunks : 0);
  ParallelFor(chunks, threads, [&](std::size_t c) {
    const std::size_t begin = c * kChunkSize;
    const std::size_t count = std::min(kChunkSize, sentences.size() - begin);
    ProcessChunk(sentences.subspan(begin, count),
                 std::span<SimplifyResult>(results).subspan(begin, count),
                 times ? &chunk_times[c] : nullptr);
  });
  if (times) {
    for (const StageTimes& t : chunk_times) *times += t;
  }
  return results;
}

void CorpusStats::Add(const SimplifyResult& result) {
  ++sentences;
  tokens += result.tokens.size();
  lemma_changes += result.lemma_changes;
  replacements += result.replacements.size();
  std::vector<bool> replaced(result.tokens.size(), false);
  for (const Replacement& r : result.replacements) {
    if (r.position < replaced.size()) replaced[r.position] = true;
    similarity_sum += r.similarity;
    const double gain = static_cast<double>(std::max<Count>(r.replacement_freq, 1)) /
                        static_cast<double>(std::max<Count>(r.original_freq, 1));
    log_gain_sum += std::log10(gain);
  }
  for (std::size_t i = 0; i < result.tokens.size(); ++i) {
    if (replaced[i] || HasLetter(result.tokens[i].surface)) ++alphabetic_tokens;
  }
}

double CorpusStats::replaced_fraction() const {
  return alphabetic_tokens ? static_cast<double>(replacements) /
                                 static_cast<double>(alphabetic_tokens)
                           : 0.0;
}

double CorpusStats::lemma_fraction() const {
  return tokens ? static_cast<double>(lemma_changes) / static_cast<double>(tokens)
                : 0.0;
}

double CorpusStats::mean_similarity() const {
  return replacements ? similarity_sum / static_cast<double>(replacements) : 0.0;
}

double CorpusStats::mean_freq_gain() const {
  return replacements ? log_gain_sum / static_cast<double>(replacements) : 0.0;
}

}  // namespace lexsimp
