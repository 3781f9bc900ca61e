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

#include "lexsimp/pairenc.h"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

#include "lexsimp/morphology.h"
#include "lexsimp/text.h"

namespace lexsimp {
namespace {

using OrderedJson = nlohmann::ordered_json;

// Rows simplified per batch before their records are written.
constexpr std::size_t kEmitBlock = 4096;

std::vector<std::string> Surfaces(std::string_view text) {
  std::vector<std::string> out;
  for (Token& token : Tokenize(text)) out.push_back(std::move(token.surface));
  return out;
}

OrderedJson ReplacementToJson(const Replacement& r) {
  OrderedJson j;
  j["position"] = r.position;
  j["original"] = r.original;
  j["replacement"] = r.replacement;
  j["original_freq"] = r.original_freq;
  j["replacement_freq"] = r.replacement_freq;
  j["similarity"] = r.similarity;
  return j;
}

Replacement ReplacementFromJson(const nlohmann::json& j) {
  Replacement r;
  r.position = j.at("position").get<std::size_t>();
  r.original = j.at("original").get<std::string>();
  r.replacement = j.at("replacement").get<std::string>();
  r.original_freq = j.at("original_freq").get<Count>();
  r.replacement_freq = j.at("replacement_freq").get<Count>();
  r.similarity = j.at("similarity").get<double>();
  return r;
}

void CheckNonEmpty(const Dataset& data) {
  if (data.empty()) throw std::invalid_argument("empty dataset: " + data.source);
}

// Shared driver: `rewrite(begin, end)` yields results for that row range.
template <typename RewriteFn>
EmissionReport Emit(const Dataset& data, EmitMode mode, std::ostream& out,
                    RewriteFn&& rewrite) {
  CheckNonEmpty(data);
  EmissionReport report;
  const std::size_t n = data.size();
  if (mode == EmitMode::kBaseline) {
    for (const LabeledExample& ex : data.examples) {
      out << FormatRecord(MakeSingleRecord(ex, ex.text, "orig")) << '\n';
    }
    report.records = n;
  } else {
    // aug writes every original before any simplified copy.
    if (mode == EmitMode::kAug) {
      for (const LabeledExample& ex : data.examples) {
        out << FormatRecord(MakeSingleRecord(ex, ex.text, "orig")) << '\n';
      }
      report.records += n;
    }
    for (std::size_t begin = 0; begin < n; begin += kEmitBlock) {
      const std::size_t end = std::min(n, begin + kEmitBlock);
      const std::vector<SimplifyResult> results = rewrite(begin, end);
      for (std::size_t i = begin; i < end; ++i) {
        const LabeledExample& ex = data.examples[i];
        const SimplifyResult& r = results[i - begin];
        report.stats.Add(r);
        const PairRecord record =
            mode == EmitMode::kAux ? MakeRecord(ex, r)
                                   : MakeSingleRecord(ex, r.text, "simp", r.replacements);
        out << FormatRecord(record) << '\n';
      }
      report.records += end - begin;
    }
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed");
  return report;
}

}  // namespace

EmitMode ParseEmitMode(std::string_view name) {
  if (name == "baseline") return EmitMode::kBaseline;
  if (name == "only") return EmitMode::kOnly;
  if (name == "aug") return EmitMode::kAug;
  if (name == "aux") return EmitMode::kAux;
  throw std::invalid_argument("unknown emit mode '" + std::string(name) +
                              "' (expected baseline, only, aug or aux)");
}

std::string_view EmitModeName(EmitMode mode) {
  switch (mode) {
    case EmitMode::kBaseline: return "baseline";
    case EmitMode::kOnly: return "only";
    case EmitMode::kAug: return "aug";
    case EmitMode::kAux: return "aux";
  }
  return "baseline";
}

PairRecord MakeRecord(const LabeledExample& example,
                      const SimplifyResult& simplified) {
  if (Trim(simplified.text).empty()) {
    throw std::invalid_argument("simplified sentence empty");
  }
  PairRecord record;
  record.id = example.id;
  record.label = example.label;
  record.variant = "aux";
  record.text_a = example.text;
  record.text_b = simplified.text;
  record.tokens = Surfaces(example.text);
  record.segments.assign(record.tokens.size() + 1, 0);
  record.tokens.emplace_back(kSeparator);
  for (std::string& word : Surfaces(simplified.text)) {
    record.tokens.push_back(std::move(word));
    record.segments.push_back(1);
  }
  record.replacements = simplified.replacements;
  return record;
}

PairRecord MakeSingleRecord(const LabeledExample& example, std::string_view text,
                            std::string_view variant,
                            std::vector<Replacement> replacements) {
  PairRecord record;
  record.id = example.id;
  record.label = example.label;
  record.variant = std::string(variant);
  record.text_a = std::string(text);
  record.tokens = Surfaces(text);
  record.segments.assign(record.tokens.size(), 0);
  record.replacements = std::move(replacements);
  return record;
}

SimplifyResult ExternalResult(std::string_view text) {
  SimplifyResult result;
  result.tokens = Tokenize(text);
  for (const Token& token : result.tokens) {
    if (!result.text.empty()) result.text.push_back(' ');
    result.text += token.surface;
  }
  return result;
}

std::vector<PairRecord> BuildRecords(const Dataset& data,
                                     std::span<const SimplifyResult> simplified,
                                     EmitMode mode) {
  std::vector<PairRecord> records;
  if (mode != EmitMode::kBaseline && simplified.size() != data.size()) {
    throw std::invalid_argument("simplified results do not match the dataset");
  }
  if (mode == EmitMode::kBaseline || mode == EmitMode::kAug) {
    for (const LabeledExample& ex : data.examples) {
      records.push_back(MakeSingleRecord(ex, ex.text, "orig"));
    }
  }
  if (mode == EmitMode::kBaseline) return records;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const LabeledExample& ex = data.examples[i];
    const SimplifyResult& r = simplified[i];
    records.push_back(mode == EmitMode::kAux
                          ? MakeRecord(ex, r)
                          : MakeSingleRecord(ex, r.text, "simp", r.replacements));
  }
  return records;
}

std::string FormatRecord(const PairRecord& record) {
  OrderedJson j;
  j["id"] = record.id;
  j["label"] = record.label;
  j["variant"] = record.variant;
  j["text_a"] = record.text_a;
  j["text_b"] = record.text_b;
  j["tokens"] = record.tokens;
  j["segments"] = record.segments;
  OrderedJson reps = OrderedJson::array();
  for (const Replacement& r : record.replacements) reps.push_back(ReplacementToJson(r));
  j["replacements"] = std::move(reps);
  return j.dump();
}

PairRecord ParseRecord(std::string_view line) {
  const nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw FormatError("invalid JSON record");
  try {
    PairRecord record;
    record.id = j.at("id").get<std::size_t>();
    record.label = j.at("label").get<std::string>();
    record.variant = j.at("variant").get<std::string>();
    record.text_a = j.at("text_a").get<std::string>();
    record.text_b = j.at("text_b").get<std::string>();
    record.tokens = j.at("tokens").get<std::vector<std::string>>();
    record.segments = j.at("segments").get<std::vector<int>>();
    for (const auto& r : j.at("replacements")) {
      record.replacements.push_back(ReplacementFromJson(r));
    }
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed record: ") + e.what());
  }
}

std::vector<PairRecord> ReadRecords(std::istream& in) {
  std::vector<PairRecord> records;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (Trim(line).empty()) continue;
    try {
      records.push_back(ParseRecord(line));
    } catch (const FormatError& e) {
      throw LineError(number, e.what());
    }
  }
  return records;
}

EmissionReport EmitDataset(const Dataset& data, const Simplifier& simplifier,
                           EmitMode mode, std::ostream& out, std::size_t threads) {
  std::vector<std::string> texts;
  return Emit(data, mode, out, [&](std::size_t begin, std::size_t end) {
    texts.clear();
    for (std::size_t i = begin; i < end; ++i) texts.push_back(data.examples[i].text);
    return simplifier.SimplifyBatch(texts, threads);
  });
}

EmissionReport EmitDataset(const Dataset& data, const Simplifier& simplifier,
                           EmitMode mode, const std::string& path,
                           std::size_t threads) {
  CheckNonEmpty(data);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return EmitDataset(data, simplifier, mode, out, threads);
}

EmissionReport EmitDataset(const Dataset& data,
                           std::span<const std::string> rewrites, EmitMode mode,
                           std::ostream& out) {
  if (rewrites.size() != data.size()) {
    throw std::invalid_argument("rewrite file has " + std::to_string(rewrites.size()) +
                                " lines, dataset has " + std::to_string(data.size()));
  }
  return Emit(data, mode, out, [&](std::size_t begin, std::size_t end) {
    std::vector<SimplifyResult> results;
    for (std::size_t i = begin; i < end; ++i) results.push_back(ExternalResult(rewrites[i]));
    return results;
  });
}

}  // namespace lexsimp
