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

#ifndef LEXSIMP_CORPUS_H_
#define LEXSIMP_CORPUS_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace lexsimp {

enum class DatasetFormat { kTsv, kJsonl, kPlain };

// Accepts "tsv", "jsonl" or "plain"; throws std::invalid_argument otherwise.
DatasetFormat ParseDatasetFormat(std::string_view name);
std::string_view DatasetFormatName(DatasetFormat format);

struct LabeledExample {
  std::string text;
  std::string label;  // Opaque; empty for unlabeled data.
  std::size_t id = 0;

  bool operator==(const LabeledExample&) const = default;
};

struct Dataset {
  std::vector<LabeledExample> examples;
  std::string source;
  bool labeled = false;
  // Lines skipped because they were blank after trimming.
  std::size_t skipped_lines = 0;

  std::size_t size() const { return examples.size(); }
  bool empty() const { return examples.empty(); }
};

// Pulls examples from a stream one at a time. Ids are assigned 0..N-1 in
// stream order; blank lines are counted and skipped.
class DatasetReader {
 public:
  DatasetReader(std::istream& in, DatasetFormat format);

  // Returns std::nullopt at end of input. Throws FormatError naming the
  // 1-based line for malformed lines.
  std::optional<LabeledExample> Next();

  std::size_t skipped_lines() const { return skipped_; }
  // True once any example carried a non-empty label member/field.
  bool saw_label() const { return saw_label_; }

 private:
  std::istream& in_;
  DatasetFormat format_;
  std::size_t line_number_ = 0;
  std::size_t next_id_ = 0;
  std::size_t skipped_ = 0;
  bool saw_label_ = false;
};

Dataset ReadDataset(std::istream& in, DatasetFormat format,
                    std::string source = "<stream>");

// Throws FormatError for malformed or empty input, std::runtime_error when
// the file cannot be opened.
Dataset LoadDataset(const std::string& path, DatasetFormat format);

// `label<TAB>text` per example.
void WriteTsv(const Dataset& data, std::ostream& out);

}  // namespace lexsimp

#endif  // LEXSIMP_CORPUS_H_
