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


// Shared fixtures and independent oracles for the test binaries.

#ifndef LEXSIMP_TESTS_TESTING_FIXTURES_H_
#define LEXSIMP_TESTS_TESTING_FIXTURES_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lexsimp/embeddings.h"
#include "lexsimp/resources.h"

namespace lexsimp::testing {

// Absolute path of a file under the source tree.
std::string SourcePath(const std::string& relative);

// The toy resources under data/fixture.
ResourcePaths FixturePaths();
const Resources& FixtureResources();

// The fixture lexicons with a caller-chosen embedding table.
Resources FixtureWith(std::vector<std::pair<std::string, std::vector<double>>> rows);

EmbeddingTable MakeTable(const std::vector<std::pair<std::string, std::vector<double>>>& rows);

// Random table of 2..1000 words in 1..16 dimensions with small integer
// coordinates, so exact ties (duplicate and parallel rows) are common.
EmbeddingTable RandomIntegerTable(std::mt19937_64& rng);

// Exhaustive top-k: scores every other row as the double sum of the stored
// float products (clamped to [-1, 1]), sorts everything, then truncates.
std::vector<Neighbor> BruteForceTopK(const EmbeddingTable& table, std::size_t query,
                                     std::size_t k);

// Random sentences over the fixture vocabulary, inflected forms included.
std::vector<std::string> RandomFixtureSentences(std::size_t count, std::uint64_t seed);

// Reads a file into a string; empty when missing.
std::string ReadFile(const std::string& path);

}  // namespace lexsimp::testing

#endif  // LEXSIMP_TESTS_TESTING_FIXTURES_H_
