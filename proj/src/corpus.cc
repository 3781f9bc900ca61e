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

#include "lexsimp/corpus.h"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lexsimp/text.h"

namespace lexsimp {

DatasetFormat ParseDatasetFormat(std::string_view name) {
  if (name == "tsv") return DatasetFormat::kTsv;
  if (name == "jsonl") return DatasetFormat::kJsonl;
  if (name == "plain") return DatasetFormat::kPlain;
  throw std::invalid_argument("unknown dataset format '" + std::string(name) +
                              "' (expected tsv, jsonl or plain)");
}

std::string_view DatasetFormatName(DatasetFormat format) {
  switch (format) {
    case DatasetFormat::kTsv:
      return "tsv";
    case DatasetFormat::kJsonl:
      return "jsonl";
    case DatasetFormat::kPlain:
      return "plain";
  }
  return "?";
}

DatasetReader::DatasetReader(std::istream& in, DatasetFormat format)
    : in_(in), format_(format) {}

std::optional<LabeledExample> DatasetReader::Next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    const std::string_view trimmed = Trim(line);
    if (trimmed.empty()) {
      ++skipped_;
      continue;
    }
    if (!IsValidUtf8(line)) throw LineError(line_number_, "invalid UTF-8");

    LabeledExample example;
    switch (format_) {
      case DatasetFormat::kTsv: {
        // The label/text split is the first TAB of the raw line, so a label
        // field may be empty but must be present.
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
          throw LineError(line_number_, "missing TAB separator");
        }
        example.label = std::string(Trim(std::string_view(line).substr(0, tab)));
        example.text = std::string(Trim(std::string_view(line).substr(tab + 1)));
        break;
      }
      case DatasetFormat::kJsonl: {
        nlohmann::json obj;
        try {
          obj = nlohmann::json::parse(trimmed);
        } catch (const nlohmann::json::parse_error&) {
          throw LineError(line_number_, "invalid JSON");
        }
        if (!obj.is_object()) throw LineError(line_number_, "expected a JSON object");
        const auto text = obj.find("text");
        if (text == obj.end() || !text->is_string()) {
          throw LineError(line_number_, "missing string member 'text'");
        }
        example.text = std::string(Trim(text->get_ref<const std::string&>()));
        if (const auto label = obj.find("label"); label != obj.end()) {
          if (label->is_string()) {
            example.label = label->get<std::string>();
          } else if (!label->is_null()) {
            // Numeric labels keep their JSON spelling; they are never parsed.
            example.label = label->dump();
          }
        }
        break;
      }
      case DatasetFormat::kPlain:
        example.text = std::string(trimmed);
        break;
    }
    if (example.text.empty()) {
      ++skipped_;
      continue;
    }
    if (!example.label.empty()) saw_label_ = true;
    example.id = next_id_++;
    return example;
  }
  return std::nullopt;
}

Dataset ReadDataset(std::istream& in, DatasetFormat format, std::string source) {
  Dataset data;
  data.source = std::move(source);
  DatasetReader reader(in, format);
  while (auto example = reader.Next()) data.examples.push_back(std::move(*example));
  if (data.examples.empty()) throw FormatError("empty dataset: " + data.source);
  data.skipped_lines = reader.skipped_lines();
  data.labeled = format == DatasetFormat::kTsv ||
                 (format == DatasetFormat::kJsonl && reader.saw_label());
  return data;
}

Dataset LoadDataset(const std::string& path, DatasetFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open dataset: " + path);
  return ReadDataset(in, format, path);
}

void WriteTsv(const Dataset& data, std::ostream& out) {
  for (const LabeledExample& example : data.examples) {
    out << example.label << '\t' << example.text << '\n';
  }
}

}  // namespace lexsimp
