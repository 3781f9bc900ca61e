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

#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "lexsimp/rng.h"
#include "lexsimp/text.h"
#include "testing/fixtures.h"

namespace lexsimp {
namespace {

const Resources& Res() { return testing::FixtureResources(); }

ParaphraseConfig Replace(std::size_t k, std::size_t ns, std::uint64_t seed) {
  ParaphraseConfig cfg;
  cfg.method = ParaphraseMethod::kRandomReplace;
  cfg.k = k;
  cfg.n_s = ns;
  cfg.seed = seed;
  return cfg;
}

ParaphraseConfig Cut(double p, std::uint64_t seed) {
  ParaphraseConfig cfg;
  cfg.method = ParaphraseMethod::kCutoff;
  cfg.p = p;
  cfg.seed = seed;
  return cfg;
}

std::vector<std::string> Words(std::string_view s) {
  std::vector<std::string> out;
  for (const Token& t : Tokenize(s)) out.push_back(t.surface);
  return out;
}

bool IsSubsequence(const std::vector<std::string>& sub, const std::vector<std::string>& full) {
  std::size_t j = 0;
  for (const std::string& w : full) {
    if (j < sub.size() && sub[j] == w) ++j;
  }
  return j == sub.size();
}

std::string Golden(const std::string& name) {
  std::string text = testing::ReadFile(testing::SourcePath("tests/data/golden/" + name));
  while (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

TEST(RngTest, PinnedStream) {
  Rng rng(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.Next();
  EXPECT_EQ(x, 9981545732273789042ULL);

  Rng a(17);
  Rng b(17);
  const std::uint64_t raw = a.Next();
  EXPECT_EQ(b.Uniform01(), static_cast<double>(raw >> 11) * 0x1.0p-53);
}

TEST(RngTest, BelowStaysInRange) {
  Rng rng(3);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t v = rng.Below(7);
    ASSERT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(RandomReplaceTest, ZeroKIsIdentity) {
  for (const std::string& s : testing::RandomFixtureSentences(200, 4)) {
    EXPECT_EQ(Words(RandomReplace(s, Replace(0, 5, 1), Res().embeddings, Res().lexicons)),
              Words(s));
  }
}

TEST(RandomReplaceTest, FelineGolden) {
  const std::string got =
      RandomReplace("the feline", Replace(1, 2, 7), Res().embeddings, Res().lexicons);
  EXPECT_TRUE(got == "the cat" || got == "the dog") << got;
  EXPECT_EQ(got, Golden("random_replace_feline_seed7.txt"));
}

TEST(RandomReplaceTest, NoEmbeddedWordsUnchanged) {
  EXPECT_EQ(RandomReplace("the London mouse is great", Replace(5, 10, 3), Res().embeddings,
                          Res().lexicons),
            "the London mouse is great");
}

TEST(RandomReplaceTest, ReplacementsComeFromCompatibleNeighbors) {
  const Resources& res = Res();
  for (std::size_t k : {1, 2, 3}) {
    for (std::size_t ns : {1, 3, 6}) {
      for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::string s = testing::RandomFixtureSentences(1, seed * 31 + k)[0];
        std::vector<Token> tokens = Tokenize(s);
        TagTokens(tokens, res.lexicons);
        const std::vector<std::string> out =
            Words(RandomReplace(s, Replace(k, ns, seed), res.embeddings, res.lexicons));
        ASSERT_EQ(out.size(), tokens.size()) << s;
        std::size_t changed = 0;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
          if (out[i] == tokens[i].surface) continue;
          ++changed;
          const auto row = res.embeddings.Find(tokens[i].key);
          ASSERT_TRUE(row.has_value()) << tokens[i].surface;
          EXPECT_NE(tokens[i].coarse_tag, CoarseTag::kProperNoun);
          std::set<std::string> allowed;
          for (const Neighbor& n : testing::BruteForceTopK(res.embeddings, *row, ns)) {
            const std::string& w = res.embeddings.Word(n.index);
            const std::string* tag = res.lexicons.TagOf(w);
            if (w != tokens[i].key && tag && CoarseTagOf(*tag) == tokens[i].coarse_tag) {
              allowed.insert(w);
            }
          }
          EXPECT_TRUE(allowed.count(ToLower(out[i]))) << tokens[i].surface << "->" << out[i];
        }
        EXPECT_LE(changed, k);
      }
    }
  }
}

TEST(RandomReplaceTest, DeterministicAndSeedSensitive) {
  std::set<std::string> outputs;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::string a = RandomReplace("the feline purchased a canine", Replace(2, 4, seed),
                                        Res().embeddings, Res().lexicons);
    EXPECT_EQ(a, RandomReplace("the feline purchased a canine", Replace(2, 4, seed),
                               Res().embeddings, Res().lexicons));
    outputs.insert(a);
  }
  EXPECT_GT(outputs.size(), 1u);
}

TEST(CutoffTest, ZeroIsIdentity) {
  for (const std::string& s : testing::RandomFixtureSentences(200, 8)) {
    EXPECT_EQ(Words(Cutoff(s, Cut(0.0, 9))), Words(s));
  }
}

TEST(CutoffTest, OneKeepsFirstToken) {
  EXPECT_EQ(Cutoff("a b c", Cut(1.0, 0)), "a");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(Words(Cutoff("The felines ran .", Cut(1.0, seed))).size(), 1u);
  }
  EXPECT_EQ(Cutoff("", Cut(0.5, 0)), "");
}

TEST(CutoffTest, HalfGolden) {
  const std::string got = Cutoff("a b c d", Cut(0.5, 42));
  const std::vector<std::string> words = Words(got);
  EXPECT_FALSE(words.empty());
  EXPECT_TRUE(IsSubsequence(words, {"a", "b", "c", "d"})) << got;
  EXPECT_EQ(got, Golden("cutoff_p05_seed42.txt"));
}

TEST(CutoffTest, AlwaysNonEmptySubsequence) {
  for (double p : {0.1, 0.5, 0.9}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const std::string s = testing::RandomFixtureSentences(1, seed)[0];
      const std::vector<std::string> out = Words(Cutoff(s, Cut(p, seed)));
      EXPECT_FALSE(out.empty());
      EXPECT_TRUE(IsSubsequence(out, Words(s)));
    }
  }
}

TEST(CutoffTest, MeanDeletionFraction) {
  const std::string s = "w0 w1 w2 w3 w4 w5 w6 w7 w8 w9 w10 w11 w12 w13 w14 w15 w16 w17 w18 w19";
  double sum = 0.0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    sum += 1.0 - static_cast<double>(Words(Cutoff(s, Cut(0.3, seed))).size()) / 20.0;
  }
  EXPECT_NEAR(sum / 10000.0, 0.3, 0.02);
}

TEST(ParaphraserTest, BatchMatchesSingleAcrossThreads) {
  const auto corpus = testing::RandomFixtureSentences(700, 12);
  std::vector<std::size_t> ids(corpus.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  for (const ParaphraseConfig& cfg : {Replace(2, 5, 77), Cut(0.3, 77)}) {
    const Paraphraser p(Res(), cfg);
    const auto one = p.ParaphraseBatch(corpus, ids, 1);
    const auto eight = Paraphraser(Res(), cfg).ParaphraseBatch(corpus, ids, 8);
    EXPECT_EQ(one, eight);
    for (std::size_t i = 0; i < corpus.size(); i += 23) {
      EXPECT_EQ(one[i], p.Paraphrase(corpus[i], SentenceSeed(cfg.seed, i)));
      ParaphraseConfig single = cfg;
      single.seed = SentenceSeed(cfg.seed, i);
      EXPECT_EQ(one[i], cfg.method == ParaphraseMethod::kCutoff
                            ? Cutoff(corpus[i], single)
                            : RandomReplace(corpus[i], single, Res().embeddings,
                                            Res().lexicons));
    }
  }
}

TEST(ParaphraserTest, ConfigValidation) {
  EXPECT_THROW(Cut(1.5, 0).Validate(), std::invalid_argument);
  EXPECT_THROW(Cut(-0.1, 0).Validate(), std::invalid_argument);
  EXPECT_THROW(Replace(1, 0, 0).Validate(), std::invalid_argument);
  EXPECT_EQ(ParseParaphraseMethod("cutoff"), ParaphraseMethod::kCutoff);
  EXPECT_EQ(ParseParaphraseMethod("random_replace"), ParaphraseMethod::kRandomReplace);
  EXPECT_THROW(ParseParaphraseMethod("backtranslate"), std::invalid_argument);
}

}  // namespace
}  // namespace lexsimp
