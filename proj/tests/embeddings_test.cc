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


#include "lexsimp/embeddings.h"

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "lexsimp/text.h"
#include "testing/fixtures.h"

namespace lexsimp {
namespace {

using Rows = std::vector<std::pair<std::string, std::vector<double>>>;

EmbeddingTable Read(const std::string& text) {
  std::istringstream in(text);
  return ReadEmbeddings(in);
}

std::string ErrorOf(const std::string& text) {
  try {
    Read(text);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

// The four-word table used by the retrieval examples.
EmbeddingTable SmallTable() {
  return Read("feline 1 0\ncat 1 0\ndog 3 4\ncanine 0 1\n");
}

TEST(EmbeddingsTest, LoadNormalizes) {
  const EmbeddingTable t = Read("feline 1 0\ncat 1 0\n");
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.Row(1)[0], 1.0f);
  const EmbeddingTable dog = Read("dog 3 4\n");
  EXPECT_NEAR(dog.Row(0)[0], 0.6, 1e-7);
  EXPECT_NEAR(dog.Row(0)[1], 0.8, 1e-7);
}

TEST(EmbeddingsTest, LoadErrors) {
  EXPECT_EQ(ErrorOf("a 1 0\nb 1 0 0\n"), "line 2: dimension mismatch");
  EXPECT_EQ(ErrorOf("a 1 0\nzero 0 0\n"), "line 2: zero-norm vector for 'zero'");
  EXPECT_EQ(ErrorOf("a 1 x\n"), "line 1: invalid value");
  EXPECT_EQ(ErrorOf("a 1 nan\n"), "line 1: non-finite value");
  EXPECT_EQ(ErrorOf("3 2\na 1 0 0\n"), "line 2: dimension mismatch");
  EXPECT_NE(ErrorOf(""), "");
}

TEST(EmbeddingsTest, HeaderAndDuplicates) {
  const EmbeddingTable t = Read("3 2\nCat 1 0\ncat 0 1\ndog 0 1\n");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.Word(0), "cat");
  EXPECT_EQ(t.Row(0)[0], 1.0f);  // first occurrence kept
  EXPECT_EQ(t.Find("CAT"), std::optional<std::size_t>(0));
  EXPECT_EQ(t.Find("bird"), std::nullopt);
}

TEST(EmbeddingsTest, TopKExamples) {
  const EmbeddingTable t = SmallTable();
  auto top = TopKSynonyms(t, "feline", 2);
  ASSERT_EQ(top.size(), 2u);
  EXPECT_EQ(top[0].word, "cat");
  EXPECT_DOUBLE_EQ(top[0].similarity, 1.0);
  EXPECT_EQ(top[1].word, "dog");
  EXPECT_NEAR(top[1].similarity, 0.6, 1e-7);
  top = TopKSynonyms(t, "feline", 1);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].word, "cat");
  EXPECT_TRUE(TopKSynonyms(t, "unknownword", 5).empty());
  EXPECT_EQ(TopKSynonyms(t, "feline", 10).size(), 3u);
}

TEST(EmbeddingsTest, CandidatesCarryFrequencyAndTag) {
  const Resources& res = testing::FixtureResources();
  const auto top = TopKSynonyms(res.embeddings, "feline", 2, &res.frequency, &res.lexicons);
  ASSERT_EQ(top.size(), 2u);
  // acquire and cat tie at 1.0; the word order breaks the tie.
  EXPECT_EQ(top[0].word, "acquire");
  EXPECT_EQ(top[0].frequency, 5000u);
  EXPECT_EQ(top[0].fine_tag, std::optional<std::string>("VB"));
  EXPECT_EQ(top[1].word, "cat");
  EXPECT_EQ(top[1].frequency, 50000u);
}

TEST(EmbeddingsTest, SelfSimilarityIsOne) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const EmbeddingTable t = testing::RandomIntegerTable(rng);
    for (std::size_t i = 0; i < t.size(); ++i) {
      EXPECT_NEAR(t.Similarity(i, i), 1.0, 1e-6);
      double norm = 0.0;
      for (float x : t.Row(i)) norm += static_cast<double>(x) * x;
      EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-6);
    }
  }
}

class TopKOracleTest : public ::testing::TestWithParam<std::size_t> {};

// Exact scan (default) and the pruned GEMM path (prune_min_rows = 0) must
// both match the exhaustive oracle, tie order included.
TEST_P(TopKOracleTest, MatchesExhaustiveScan) {
  std::mt19937_64 rng(1000 + GetParam());
  for (int trial = 0; trial < 10; ++trial) {
    EmbeddingTable t = testing::RandomIntegerTable(rng);
    std::vector<std::size_t> queries;
    for (std::size_t q = 0; q < t.size(); q += 1 + t.size() / 40) queries.push_back(q);
    for (std::size_t min_rows : {std::size_t{1} << 30, std::size_t{0}}) {
      t.set_prune_min_rows(min_rows);
      for (std::size_t k = 1; k <= 10; ++k) {
        const auto batch = t.NearestBatch(queries, k);
        for (std::size_t i = 0; i < queries.size(); ++i) {
          const auto want = testing::BruteForceTopK(t, queries[i], k);
          ASSERT_EQ(batch[i], want) << "k=" << k << " query=" << queries[i]
                                    << " pruned=" << (min_rows == 0);
          ASSERT_EQ(t.Nearest(queries[i], k), want);
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, TopKOracleTest, ::testing::Range<std::size_t>(0, 4));

TEST(EmbeddingsTest, PrefixAndSelfExclusion) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    EmbeddingTable t = testing::RandomIntegerTable(rng);
    t.set_prune_min_rows(trial % 2 ? 0 : std::size_t{1} << 30);
    for (std::size_t q = 0; q < t.size(); q += 1 + t.size() / 10) {
      const auto longer = t.Nearest(q, 11);
      for (std::size_t k = 1; k <= 10; ++k) {
        const auto shorter = t.Nearest(q, k);
        ASSERT_LE(shorter.size(), longer.size());
        for (std::size_t i = 0; i < shorter.size(); ++i) {
          EXPECT_EQ(shorter[i], longer[i]);
          EXPECT_NE(shorter[i].index, q);
        }
      }
    }
  }
}

TEST(EmbeddingsTest, SimilaritiesStayInRange) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  EmbeddingTable t(50);
  std::vector<double> row(50);
  for (int i = 0; i < 300; ++i) {
    for (double& x : row) x = normal(rng);
    t.Add("r" + std::to_string(i), row);
    t.Add("copy" + std::to_string(i), row);
  }
  t.set_prune_min_rows(0);
  for (std::size_t q = 0; q < t.size(); q += 7) {
    for (const Neighbor& n : t.Nearest(q, 5)) {
      EXPECT_GE(n.similarity, -1.0);
      EXPECT_LE(n.similarity, 1.0);
    }
  }
}

TEST(NeighborCacheTest, AgreesWithDirectQueries) {
  std::mt19937_64 rng(23);
  EmbeddingTable t = testing::RandomIntegerTable(rng);
  t.set_prune_min_rows(0);
  NeighborCache cache(t);
  std::vector<std::size_t> some;
  for (std::size_t q = 0; q < t.size(); q += 3) some.push_back(q);
  cache.Prefetch(some, 4);
  for (std::size_t q = 0; q < t.size(); ++q) {
    for (std::size_t k : {1, 4, 9, 4}) {
      EXPECT_EQ(cache.Get(q, k), t.Nearest(q, k)) << q << " " << k;
    }
  }
  EXPECT_EQ(cache.size(), t.size());
}

TEST(NeighborCacheTest, ConcurrentReaders) {
  std::mt19937_64 rng(29);
  EmbeddingTable t = testing::RandomIntegerTable(rng);
  NeighborCache cache(t);
  std::vector<std::thread> threads;
  std::vector<int> failures(4, 0);
  for (int w = 0; w < 4; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t q = 0; q < t.size(); ++q) {
        const std::size_t k = 1 + (q + w) % 6;
        if (cache.Get(q, k) != testing::BruteForceTopK(t, q, k)) ++failures[w];
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int f : failures) EXPECT_EQ(f, 0);
}

}  // namespace
}  // namespace lexsimp
