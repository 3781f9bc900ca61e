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

// Word-level pair records for classifiers that take an auxiliary sentence,
// and the four dataset emission modes built on them.

#ifndef LEXSIMP_PAIRENC_H_
#define LEXSIMP_PAIRENC_H_

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexsimp/corpus.h"
#include "lexsimp/simplify.h"

namespace lexsimp {

inline constexpr std::string_view kSeparator = "[SEP]";

enum class EmitMode {
  kBaseline,  // original text only
  kOnly,      // simplified text only
  kAug,       // originals followed by simplified copies
  kAux,       // original and simplified as a pair
};

EmitMode ParseEmitMode(std::string_view name);
std::string_view EmitModeName(EmitMode mode);

struct PairRecord {
  std::size_t id = 0;
  std::string label;
  std::string variant;  // "orig", "simp" or "aux"
  std::string text_a;
  std::string text_b;   // empty for single-text records
  std::vector<std::string> tokens;
  std::vector<int> segments;
  std::vector<Replacement> replacements;

  bool operator==(const PairRecord&) const = default;
};

// Pair record: tokens(a) + [SEP] + tokens(b), segment 0 through the
// separator. Throws std::invalid_argument when the simplified text is empty.
PairRecord MakeRecord(const LabeledExample& example,
                      const SimplifyResult& simplified);

// Single-text record over `text`, all segments 0.
PairRecord MakeSingleRecord(const LabeledExample& example, std::string_view text,
                            std::string_view variant,
                            std::vector<Replacement> replacements = {});

// Result carrying externally produced text (no replacements, no lemma data).
SimplifyResult ExternalResult(std::string_view text);

// Records for `mode` in emission order. `simplified` is index-aligned with
// data.examples and ignored for kBaseline.
std::vector<PairRecord> BuildRecords(const Dataset& data,
                                     std::span<const SimplifyResult> simplified,
                                     EmitMode mode);

std::string FormatRecord(const PairRecord& record);
// Throws FormatError on malformed JSON or missing members.
PairRecord ParseRecord(std::string_view line);
std::vector<PairRecord> ReadRecords(std::istream& in);

struct EmissionReport {
  std::size_t records = 0;
  CorpusStats stats;
};

// Simplifies every example (unless mode is kBaseline) and writes one JSON
// record per line. Throws std::invalid_argument for an empty dataset.
EmissionReport EmitDataset(const Dataset& data, const Simplifier& simplifier,
                           EmitMode mode, std::ostream& out,
                           std::size_t threads = 1);
// As above, writing to `path`; throws std::runtime_error when unwritable.
EmissionReport EmitDataset(const Dataset& data, const Simplifier& simplifier,
                           EmitMode mode, const std::string& path,
                           std::size_t threads = 1);

// Uses line-aligned external rewrites in place of the simplifier.
EmissionReport EmitDataset(const Dataset& data,
                           std::span<const std::string> rewrites, EmitMode mode,
                           std::ostream& out);

}  // namespace lexsimp

#endif  // LEXSIMP_PAIRENC_H_
