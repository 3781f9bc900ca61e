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


#include "lexsimp/lexicon.h"

#include <limits>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "lexsimp/text.h"
#include "testing/fixtures.h"

namespace lexsimp {
namespace {

FrequencyTable Read(const std::string& text) {
  std::istringstream in(text);
  return ReadFrequencyTable(in);
}

std::string ErrorOf(const std::string& text) {
  try {
    Read(text);
  } catch (const FormatError& e) {
    return e.what();
  }
  return "";
}

TEST(LexiconTest, LoadsEntries) {
  const FrequencyTable t = Read("cat 50000\nfeline 300\n");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.Frequency("cat"), 50000u);
  EXPECT_EQ(t.Frequency("feline"), 300u);
}

TEST(LexiconTest, DuplicatesMergeByMaxAfterLowercasing) {
  const FrequencyTable t = Read("Cat 10\ncat 50000\nCAT 7\n");
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t.Frequency("cat"), 50000u);
}

TEST(LexiconTest, Errors) {
  EXPECT_EQ(ErrorOf("cat many\n"), "line 1: invalid count");
  EXPECT_EQ(ErrorOf("# c\ncat -3\n"), "line 2: invalid count");
  EXPECT_EQ(ErrorOf("cat 1 2\n"), "line 1: invalid count");
  EXPECT_EQ(ErrorOf("cat\n"), "line 1: invalid count");
  EXPECT_NE(ErrorOf("# only comments\n\n"), "");
}

TEST(LexiconTest, FixtureLookups) {
  const FrequencyTable& t = testing::FixtureResources().frequency;
  EXPECT_EQ(t.Frequency("feline"), 300u);
  EXPECT_EQ(t.Frequency("Feline"), 300u);
  EXPECT_EQ(t.Frequency("zyzzyva"), 0u);
  EXPECT_EQ(t.Frequency(""), 0u);
  EXPECT_EQ(t.Frequency("\xff\xfe"), 0u);
  EXPECT_TRUE(t.IsRare("feline", 1000));
  EXPECT_FALSE(t.IsRare("cat", 1000));
  EXPECT_FALSE(t.IsRare("feline", 0));
}

TEST(LexiconTest, PunctuationAndDigitsNeverRare) {
  const FrequencyTable& t = testing::FixtureResources().frequency;
  const Count huge = std::numeric_limits<Count>::max();
  EXPECT_FALSE(t.IsRare(".", huge));
  EXPECT_FALSE(t.IsRare("1999", huge));
  EXPECT_FALSE(t.IsRare("3.14", huge));
  EXPECT_TRUE(t.IsRare("zyzzyva", 1));
}

TEST(LexiconTest, RarityIsMonotoneInThreshold) {
  const FrequencyTable& t = testing::FixtureResources().frequency;
  const Count all = t.max_count() + 1;
  for (const char* w : {"the", "cat", "feline", "canine", "purchase", "zyzzyva"}) {
    bool was_rare = false;
    for (Count nf : {Count{0}, Count{1}, Count{250}, Count{251}, Count{1000}, Count{50000},
                     Count{1000000}, all}) {
      const bool rare = t.IsRare(w, nf);
      EXPECT_TRUE(!was_rare || rare) << w << " at " << nf;
      was_rare = rare;
      if (nf == 0) EXPECT_FALSE(rare);
    }
    EXPECT_TRUE(t.IsRare(w, all)) << w;
  }
}

TEST(LexiconTest, MissingFile) {
  EXPECT_THROW(LoadFrequencyTable("/nonexistent/freq.txt"), std::runtime_error);
}

}  // namespace
}  // namespace lexsimp
