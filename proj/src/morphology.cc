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

#include "lexsimp/morphology.h"

#include <array>
#include <fstream>
#include <optional>
#include <stdexcept>

namespace lexsimp {
namespace {

struct DetachmentRule {
  std::string_view suffix;
  std::string_view replacement;
  // Drop one letter of a doubled final consonant after detaching
  // (running -> runn -> run).
  bool undouble = false;
};

constexpr std::array kNounRules = {
    DetachmentRule{"ses", "s"},   DetachmentRule{"xes", "x"},
    DetachmentRule{"zes", "z"},   DetachmentRule{"zzes", "z"},
    DetachmentRule{"ches", "ch"}, DetachmentRule{"shes", "sh"},
    DetachmentRule{"ies", "y"},   DetachmentRule{"men", "man"},
    DetachmentRule{"s", ""},
};

constexpr std::array kVerbRules = {
    DetachmentRule{"ies", "y"}, DetachmentRule{"ied", "y"},
    DetachmentRule{"ing", "e"}, DetachmentRule{"ing", ""},
    DetachmentRule{"ing", "", true}, DetachmentRule{"ed", "e"},
    DetachmentRule{"ed", ""},   DetachmentRule{"ed", "", true},
    DetachmentRule{"es", "e"},  DetachmentRule{"es", ""},
    DetachmentRule{"s", ""},
};

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::optional<std::string> ApplyRule(std::string_view word,
                                     const DetachmentRule& rule,
                                     CoarseTag tag) {
  if (word.size() <= rule.suffix.size() || !word.ends_with(rule.suffix)) {
    return std::nullopt;
  }
  std::string_view stem = word.substr(0, word.size() - rule.suffix.size());
  // Bare -s never comes off -ss (glass, pass), nor off nominal -us/-is
  // (bus, analysis).
  if (rule.suffix == "s" && rule.replacement.empty()) {
    if (stem.ends_with('s')) return std::nullopt;
    if (tag == CoarseTag::kNoun && (stem.ends_with('u') || stem.ends_with('i'))) {
      return std::nullopt;
    }
  }
  if (rule.undouble) {
    if (stem.size() < 3) return std::nullopt;
    const char last = stem.back();
    if (last != stem[stem.size() - 2] || !IsAsciiLower(last) || IsVowel(last)) {
      return std::nullopt;
    }
    stem.remove_suffix(1);
  }
  std::string result(stem);
  result += rule.replacement;
  return result;
}

bool IsBaseTag(std::string_view tag, CoarseTag coarse) {
  if (coarse == CoarseTag::kNoun) return tag == "NN";
  return tag == "VB" || tag == "VBP";
}

std::ifstream OpenResource(const std::string& path, std::string_view what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + std::string(what) + ": " + path);
  return in;
}

}  // namespace

std::string_view CoarseTagName(CoarseTag tag) {
  switch (tag) {
    case CoarseTag::kNoun:
      return "NOUN";
    case CoarseTag::kProperNoun:
      return "PROPER_NOUN";
    case CoarseTag::kVerb:
      return "VERB";
    case CoarseTag::kOther:
      return "OTHER";
    case CoarseTag::kPunct:
      return "PUNCT";
    case CoarseTag::kNumber:
      return "NUMBER";
  }
  return "OTHER";
}

CoarseTag CoarseTagOf(std::string_view fine_tag) {
  if (fine_tag.starts_with("NNP")) return CoarseTag::kProperNoun;
  if (fine_tag == "NN" || fine_tag == "NNS") return CoarseTag::kNoun;
  if (fine_tag.starts_with("VB")) return CoarseTag::kVerb;
  if (fine_tag == "CD") return CoarseTag::kNumber;
  if (fine_tag == "-LRB-" || fine_tag == "-RRB-" || fine_tag == "HYPH" ||
      fine_tag == "NFP") {
    return CoarseTag::kPunct;
  }
  if (fine_tag.empty()) return CoarseTag::kOther;
  for (char c : fine_tag) {
    if (IsAsciiAlpha(c)) return CoarseTag::kOther;
  }
  return CoarseTag::kPunct;
}

const std::string* MorphLexicons::TagOf(std::string_view key) const {
  const auto it = tag_lexicon.find(key);
  return it == tag_lexicon.end() ? nullptr : &it->second;
}

void ReadTagLexicon(std::istream& in, MorphLexicons& lex) {
  ForEachResourceLine(in, [&](std::size_t line, std::string_view text) {
    const auto fields = SplitWhitespace(text);
    if (fields.size() != 2) throw LineError(line, "expected 'word TAG'");
    lex.tag_lexicon.try_emplace(ToLower(fields[0]), std::string(fields[1]));
  });
}

void ReadExceptions(std::istream& in, StringMap<std::string>& target) {
  ForEachResourceLine(in, [&](std::size_t line, std::string_view text) {
    const auto fields = SplitWhitespace(text);
    if (fields.size() != 2) throw LineError(line, "expected 'inflected lemma'");
    std::string lemma = ToLower(fields[1]);
    auto [it, inserted] = target.try_emplace(ToLower(fields[0]), lemma);
    if (!inserted && it->second != lemma) {
      throw LineError(line, "conflicting exception for '" + it->first + "'");
    }
  });
}

MorphLexicons LoadMorphLexicons(const std::string& tag_lexicon_path,
                                const std::string& noun_exceptions_path,
                                const std::string& verb_exceptions_path) {
  MorphLexicons lex;
  if (!tag_lexicon_path.empty()) {
    auto in = OpenResource(tag_lexicon_path, "tag lexicon");
    ReadTagLexicon(in, lex);
  }
  if (!noun_exceptions_path.empty()) {
    auto in = OpenResource(noun_exceptions_path, "noun exceptions");
    ReadExceptions(in, lex.noun_exceptions);
  }
  if (!verb_exceptions_path.empty()) {
    auto in = OpenResource(verb_exceptions_path, "verb exceptions");
    ReadExceptions(in, lex.verb_exceptions);
  }
  return lex;
}

std::vector<Token> Tokenize(std::string_view sentence) {
  std::vector<Token> tokens;
  auto emit = [&tokens](std::string_view piece) {
    Token token;
    token.surface = std::string(piece);
    token.key = ToLower(piece);
    token.position = tokens.size();
    tokens.push_back(std::move(token));
  };
  for (std::string_view piece : SplitWhitespace(sentence)) {
    std::size_t begin = 0;
    std::size_t end = piece.size();
    while (begin < end && IsAsciiPunct(piece[begin])) {
      emit(piece.substr(begin, 1));
      ++begin;
    }
    std::size_t core_end = end;
    while (core_end > begin && IsAsciiPunct(piece[core_end - 1])) --core_end;
    if (core_end > begin) emit(piece.substr(begin, core_end - begin));
    for (std::size_t i = core_end; i < end; ++i) emit(piece.substr(i, 1));
  }
  return tokens;
}

void TagTokens(std::vector<Token>& tokens, const MorphLexicons& lex) {
  for (Token& token : tokens) {
    if (const std::string* tag = lex.TagOf(token.key)) {
      token.fine_tag = *tag;
    } else {
      const std::string_view key = token.key;
      bool has_digit = false;
      for (char c : key) has_digit = has_digit || IsAsciiDigit(c);
      if (key.ends_with("ing")) {
        token.fine_tag = "VBG";
      } else if (key.ends_with("ed")) {
        token.fine_tag = "VBD";
      } else if (key.ends_with('s') && key.size() > 3) {
        token.fine_tag = "NNS";
      } else if (token.position > 0 && StartsUpper(token.surface)) {
        token.fine_tag = "NNP";
      } else if (has_digit && IsPunctOrDigits(key)) {
        token.fine_tag = "CD";
      } else if (key.size() == 1 && IsAsciiPunct(key[0])) {
        token.fine_tag = ".";
      } else {
        token.fine_tag = "NN";
      }
    }
    token.coarse_tag = CoarseTagOf(token.fine_tag);
  }
}

std::string Lemmatize(const Token& token, const MorphLexicons& lex,
                      const FrequencyTable& freq) {
  const CoarseTag coarse = token.coarse_tag;
  if (coarse != CoarseTag::kNoun && coarse != CoarseTag::kVerb) {
    throw std::invalid_argument("lemmatize called on non-noun/verb");
  }
  const std::string& key = token.key;
  const auto& exceptions =
      coarse == CoarseTag::kNoun ? lex.noun_exceptions : lex.verb_exceptions;
  if (const auto it = exceptions.find(key); it != exceptions.end()) {
    return it->second;
  }
  if (const std::string* tag = lex.TagOf(key); tag && IsBaseTag(*tag, coarse)) {
    return key;
  }

  std::optional<std::string> fallback;
  auto try_rules = [&](const auto& rules) -> std::optional<std::string> {
    for (const DetachmentRule& rule : rules) {
      std::optional<std::string> candidate = ApplyRule(key, rule, coarse);
      if (!candidate) continue;
      if (lex.TagOf(*candidate) != nullptr || freq.Contains(*candidate)) {
        return candidate;
      }
      if (!fallback) fallback = std::move(candidate);
    }
    return std::nullopt;
  };
  std::optional<std::string> lemma = coarse == CoarseTag::kNoun
                                         ? try_rules(kNounRules)
                                         : try_rules(kVerbRules);
  if (lemma) return *lemma;
  if (fallback) return *fallback;
  return key;
}

std::size_t LemmatizeSentence(std::vector<Token>& tokens,
                              const MorphLexicons& lex,
                              const FrequencyTable& freq, bool preserve_case) {
  std::size_t changed = 0;
  for (Token& token : tokens) {
    if (token.coarse_tag != CoarseTag::kNoun &&
        token.coarse_tag != CoarseTag::kVerb) {
      continue;
    }
    std::string lemma = Lemmatize(token, lex, freq);
    std::string surface = preserve_case && StartsUpper(token.surface)
                              ? CapitalizeFirst(lemma)
                              : lemma;
    if (surface != token.surface) {
      ++changed;
      token.surface = std::move(surface);
    }
    token.key = std::move(lemma);
  }
  return changed;
}

}  // namespace lexsimp
