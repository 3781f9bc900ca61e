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


#include "lexsimp/text.h"

#include <sstream>

#include <gtest/gtest.h>

namespace lexsimp {
namespace {

TEST(TextTest, TrimAndLower) {
  EXPECT_EQ(Trim("  a b \t\r\n"), "a b");
  EXPECT_EQ(Trim("   "), "");
  EXPECT_EQ(ToLower("FeLiNe"), "feline");
  EXPECT_EQ(ToLower("Ünï"), "Ünï");  // non-ASCII bytes pass through
}

TEST(TextTest, SplitWhitespace) {
  const auto parts = SplitWhitespace("  a\tbb  c \n");
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], "a");
  EXPECT_EQ(parts[1], "bb");
  EXPECT_EQ(parts[2], "c");
  EXPECT_TRUE(SplitWhitespace(" \t ").empty());
}

TEST(TextTest, WordClasses) {
  EXPECT_TRUE(IsPunctOrDigits("..."));
  EXPECT_TRUE(IsPunctOrDigits("1,000"));
  EXPECT_FALSE(IsPunctOrDigits("a1"));
  EXPECT_TRUE(IsPunctOrDigits(""));
  EXPECT_TRUE(IsAlphabetic("well-known"));
  EXPECT_FALSE(IsAlphabetic("b2b"));
  EXPECT_FALSE(IsAlphabetic("!"));
  EXPECT_TRUE(HasLetter("a1"));
}

TEST(TextTest, Capitalization) {
  EXPECT_TRUE(StartsUpper("The"));
  EXPECT_FALSE(StartsUpper("the"));
  EXPECT_FALSE(StartsUpper(""));
  EXPECT_EQ(CapitalizeFirst("cat"), "Cat");
  EXPECT_EQ(CapitalizeFirst(""), "");
}

TEST(TextTest, Utf8Validation) {
  EXPECT_TRUE(IsValidUtf8("plain ascii"));
  EXPECT_TRUE(IsValidUtf8("caf\xc3\xa9"));
  EXPECT_TRUE(IsValidUtf8("\xe2\x82\xac"));
  EXPECT_TRUE(IsValidUtf8("\xf0\x9f\x98\x80"));
  EXPECT_FALSE(IsValidUtf8("\xc3"));
  EXPECT_FALSE(IsValidUtf8("\xe2\x82"));
  EXPECT_FALSE(IsValidUtf8("\xff"));
  EXPECT_FALSE(IsValidUtf8("\xc0\xaf"));  // overlong
}

TEST(TextTest, LineErrorMessage) {
  EXPECT_STREQ(LineError(7, "invalid count").what(), "line 7: invalid count");
}

TEST(TextTest, ResourceLinesSkipCommentsAndBlanks) {
  std::istringstream in("# header\n\nfoo 1\n   \nbar 2\n");
  std::vector<std::pair<std::size_t, std::string>> seen;
  ForEachResourceLine(in, [&](std::size_t line, std::string_view text) {
    seen.emplace_back(line, std::string(text));
  });
  ASSERT_EQ(seen.size(), 2u);
  EXPECT_EQ(seen[0], std::make_pair(std::size_t{3}, std::string("foo 1")));
  EXPECT_EQ(seen[1], std::make_pair(std::size_t{5}, std::string("bar 2")));
}

}  // namespace
}  // namespace lexsimp
