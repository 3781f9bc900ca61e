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

// Tokenization, lexicon-driven POS tagging and rule-based lemmatization.
//
// The tagger looks every lowercase key up in a word -> Penn tag lexicon and
// falls back to suffix heuristics. The lemmatizer checks an exception list,
// then tries suffix detachment rules in order and keeps the first result
// that is a known word (tag lexicon or frequency list).

#ifndef LEXSIMP_MORPHOLOGY_H_
#define LEXSIMP_MORPHOLOGY_H_

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "lexsimp/lexicon.h"
#include "lexsimp/text.h"

namespace lexsimp {

enum class CoarseTag { kNoun, kProperNoun, kVerb, kOther, kPunct, kNumber };

std::string_view CoarseTagName(CoarseTag tag);

// NN/NNS -> noun, NNP/NNPS -> proper noun, VB* -> verb, CD -> number,
// punctuation tags -> punct, anything else -> other.
CoarseTag CoarseTagOf(std::string_view fine_tag);

struct Token {
  std::string surface;
  std::string key;  // ToLower(surface)
  std::size_t position = 0;
  std::string fine_tag;
  CoarseTag coarse_tag = CoarseTag::kOther;

  bool operator==(const Token&) const = default;
};

struct MorphLexicons {
  StringMap<std::string> tag_lexicon;
  StringMap<std::string> noun_exceptions;
  StringMap<std::string> verb_exceptions;

  // nullptr when absent.
  const std::string* TagOf(std::string_view key) const;
};

// `word TAG` lines. The first entry for a word wins.
void ReadTagLexicon(std::istream& in, MorphLexicons& lex);
// `inflected lemma` lines into `target`. A key mapped to two different
// lemmas is an error.
void ReadExceptions(std::istream& in, StringMap<std::string>& target);

// Empty paths leave the corresponding map empty.
MorphLexicons LoadMorphLexicons(const std::string& tag_lexicon_path,
                                const std::string& noun_exceptions_path,
                                const std::string& verb_exceptions_path);

// Splits on whitespace and peels leading/trailing ASCII punctuation off each
// piece, one character per token. Tags are left unset.
std::vector<Token> Tokenize(std::string_view sentence);

void TagTokens(std::vector<Token>& tokens, const MorphLexicons& lex);

// Lemma of a noun or verb token (lowercase). Throws std::invalid_argument
// for any other coarse tag.
std::string Lemmatize(const Token& token, const MorphLexicons& lex,
                      const FrequencyTable& freq);

// Rewrites every noun and verb token to its lemma, keeping a leading capital
// when `preserve_case` is set. Tags are not recomputed. Returns the number of
// tokens whose surface changed.
std::size_t LemmatizeSentence(std::vector<Token>& tokens,
                              const MorphLexicons& lex,
                              const FrequencyTable& freq,
                              bool preserve_case = true);

}  // namespace lexsimp

#endif  // LEXSIMP_MORPHOLOGY_H_
