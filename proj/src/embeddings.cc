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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <mutex>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace lexsimp {
namespace {

// Queries per GEMM pass; wide blocks amortize each pass over the table.
constexpr std::size_t kQueryBlock = 256;
// Table rows per GEMM tile; a 1024 x 256 score tile stays in L2.
constexpr std::size_t kRowTile = 1024;
// Scores tested together before any per-row work.
constexpr std::size_t kScanGroup = 16;

// Bound on |float dot - exact double dot| for two unit rows of dimension d.
// Both the float kernel and the double rescoring obey |err| <= gamma_d *
// sum |a_i b_i| <= gamma_d * (1 + u)^2 for any summation order. Anything
// scoring below (k-th best float score - 2 * bound) cannot reach the top k.
double PruneMargin(std::size_t dim) {
  const double d = static_cast<double>(dim);
  const double u_float = std::ldexp(1.0, -24);
  const double u_double = std::ldexp(1.0, -53);
  const double gamma_float = d * u_float / (1.0 - d * u_float);
  const double gamma_double = d * u_double / (1.0 - d * u_double);
  const double norm = (1.0 + u_float) * (1.0 + u_float);
  return 2.0 * (gamma_float + gamma_double) * norm * 1.01 + 1e-12;
}

// Largest float not above x.
float FloatAtMost(double x) {
  float f = static_cast<float>(x);
  if (static_cast<double>(f) > x) f = std::nextafter(f, -std::numeric_limits<float>::infinity());
  return f;
}

bool ParseDouble(std::string_view field, double& out) {
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && end == field.data() + field.size();
}

bool ParseSize(std::string_view field, std::size_t& out) {
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && end == field.data() + field.size();
}

}  // namespace

bool EmbeddingTable::Add(std::string_view word, std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("empty vector");
  if (dim_ == 0) dim_ = values.size();
  if (values.size() != dim_) throw std::invalid_argument("dimension mismatch");
  std::string key = ToLower(word);
  if (index_.find(key) != index_.end()) return false;
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
    sum += v * v;
  }
  if (sum == 0.0) {
    throw std::invalid_argument("zero-norm vector for '" + key + "'");
  }
  const double norm = std::sqrt(sum);
  for (double v : values) data_.push_back(static_cast<float>(v / norm));
  index_.emplace(key, static_cast<std::uint32_t>(words_.size()));
  words_.push_back(std::move(key));
  return true;
}

std::optional<std::size_t> EmbeddingTable::Find(std::string_view word) const {
  auto it = index_.find(word);
  if (it == index_.end()) {
    bool has_upper = false;
    for (char c : word) has_upper = has_upper || IsAsciiUpper(c);
    if (!has_upper) return std::nullopt;
    it = index_.find(ToLower(word));
    if (it == index_.end()) return std::nullopt;
  }
  return it->second;
}

double EmbeddingTable::Similarity(std::size_t a, std::size_t b) const {
  const float* x = data_.data() + a * dim_;
  const float* y = data_.data() + b * dim_;
  // Products of two floats are exact in double, so contraction into FMA
  // cannot change the result; the sum order is fixed.
  double acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    acc += static_cast<double>(x[i]) * static_cast<double>(y[i]);
  }
  // Rounding in the stored unit rows can push |acc| a hair past 1.
  return std::clamp(acc, -1.0, 1.0);
}

void EmbeddingTable::SortAndTruncate(std::vector<Neighbor>& neighbors,
                                     std::size_t k) const {
  auto before = [this](const Neighbor& a, const Neighbor& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return words_[a.index] < words_[b.index];
  };
  if (neighbors.size() > k) {
    std::partial_sort(neighbors.begin(), neighbors.begin() + static_cast<std::ptrdiff_t>(k),
                      neighbors.end(), before);
    neighbors.resize(k);
  } else {
    std::sort(neighbors.begin(), neighbors.end(), before);
  }
}

std::vector<Neighbor> EmbeddingTable::ExactScan(std::size_t query,
                                                std::size_t k) const {
  std::vector<Neighbor> all;
  all.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (i == query) continue;
    all.push_back({static_cast<std::uint32_t>(i), Similarity(query, i)});
  }
  SortAndTruncate(all, k);
  return all;
}

std::vector<Neighbor> EmbeddingTable::Rescore(std::size_t query,
                                              std::span<const Candidate> candidates,
                                              float kth_best, std::size_t m) const {
  const double threshold = static_cast<double>(kth_best) - PruneMargin(dim_);
  std::vector<Neighbor> survivors;
  for (const Candidate& c : candidates) {
    if (static_cast<double>(c.score) < threshold) continue;
    survivors.push_back({c.index, Similarity(query, c.index)});
  }
  SortAndTruncate(survivors, m);
  return survivors;
}

std::vector<Neighbor> EmbeddingTable::Nearest(std::size_t index,
                                              std::size_t k) const {
  const std::size_t queries[] = {index};
  return std::move(NearestBatch(queries, k).front());
}

std::vector<std::vector<Neighbor>> EmbeddingTable::NearestBatch(
    std::span<const std::size_t> queries, std::size_t k) const {
  std::vector<std::vector<Neighbor>> results(queries.size());
  if (k == 0 || size() < 2) return results;
  for (std::size_t q : queries) {
    if (q >= size()) throw std::out_of_range("embedding index out of range");
  }
  if (size() < prune_min_rows_) {
    for (std::size_t b = 0; b < queries.size(); ++b) {
      results[b] = ExactScan(queries[b], k);
    }
    return results;
  }

  using RowMajor = Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> table(data_.data(),
                                         static_cast<Eigen::Index>(size()),
                                         static_cast<Eigen::Index>(dim_));
  const std::size_t n = size();
  const std::size_t m = std::min(k, n - 1);
  const double margin = PruneMargin(dim_);
  Eigen::MatrixXf block;
  Eigen::MatrixXf scores;
  // Per query: a min-heap of the m best float scores, and every row that
  // was within the margin of the running m-th best when it was seen. The
  // running m-th best only rises, so the list covers the final survivors.
  std::vector<std::vector<float>> heaps(kQueryBlock);
  std::vector<std::vector<Candidate>> candidates(kQueryBlock);
  for (std::size_t start = 0; start < queries.size(); start += kQueryBlock) {
    const std::size_t count = std::min(kQueryBlock, queries.size() - start);
    block.resize(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(count));
    for (std::size_t b = 0; b < count; ++b) {
      block.col(static_cast<Eigen::Index>(b)) =
          table.row(static_cast<Eigen::Index>(queries[start + b])).transpose();
      heaps[b].clear();
      candidates[b].clear();
    }
    for (std::size_t row0 = 0; row0 < n; row0 += kRowTile) {
      const std::size_t rows = std::min(kRowTile, n - row0);
      scores.noalias() = table.middleRows(static_cast<Eigen::Index>(row0),
                                          static_cast<Eigen::Index>(rows)) *
                         block;
      for (std::size_t b = 0; b < count; ++b) {
        const float* col = scores.col(static_cast<Eigen::Index>(b)).data();
        const std::size_t query = queries[start + b];
        std::vector<float>& heap = heaps[b];
        std::vector<Candidate>& cand = candidates[b];
        double keep = -std::numeric_limits<double>::infinity();
        float keep_below = -std::numeric_limits<float>::infinity();
        if (heap.size() == m) {
          keep = static_cast<double>(heap.front()) - margin;
          keep_below = FloatAtMost(keep);
        }
        for (std::size_t g = 0; g < rows; g += kScanGroup) {
          const std::size_t g_end = std::min(rows, g + kScanGroup);
          // Cheap vectorizable test: skip groups with nothing near the top.
          bool near_top = false;
          for (std::size_t r = g; r < g_end; ++r) near_top |= col[r] >= keep_below;
          if (!near_top) continue;
          for (std::size_t r = g; r < g_end; ++r) {
            const float s = col[r];
            if (static_cast<double>(s) < keep) continue;
            const std::size_t index = row0 + r;
            if (index == query) continue;
            cand.push_back({static_cast<std::uint32_t>(index), s});
            if (heap.size() < m) {
              heap.push_back(s);
              std::push_heap(heap.begin(), heap.end(), std::greater<float>());
              if (heap.size() < m) continue;
            } else if (s > heap.front()) {
              std::pop_heap(heap.begin(), heap.end(), std::greater<float>());
              heap.back() = s;
              std::push_heap(heap.begin(), heap.end(), std::greater<float>());
            } else {
              continue;
            }
            keep = static_cast<double>(heap.front()) - margin;
            keep_below = FloatAtMost(keep);
          }
        }
      }
    }
    for (std::size_t b = 0; b < count; ++b) {
      results[start + b] = Rescore(queries[start + b], candidates[b], heaps[b].front(), m);
    }
  }
  return results;
}

EmbeddingTable ReadEmbeddings(std::istream& in) {
  EmbeddingTable table;
  std::string line;
  std::size_t number = 0;
  std::size_t header_dim = 0;
  bool first = true;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++number;
    const auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (first) {
      first = false;
      std::size_t rows = 0;
      if (fields.size() == 2 && ParseSize(fields[0], rows) &&
          ParseSize(fields[1], header_dim)) {
        continue;
      }
    }
    if (!IsValidUtf8(fields[0])) throw LineError(number, "invalid UTF-8");
    if (fields.size() < 2) throw LineError(number, "missing vector");
    values.clear();
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double v = 0.0;
      if (!ParseDouble(fields[i], v)) throw LineError(number, "invalid value");
      values.push_back(v);
    }
    const std::size_t expected = table.dim() ? table.dim() : header_dim;
    if (expected != 0 && values.size() != expected) {
      throw LineError(number, "dimension mismatch");
    }
    try {
      table.Add(fields[0], values);
    } catch (const std::invalid_argument& e) {
      throw LineError(number, e.what());
    }
  }
  if (table.empty()) throw FormatError("embedding file has no vectors");
  return table;
}

EmbeddingTable LoadEmbeddings(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open embeddings: " + path);
  return ReadEmbeddings(in);
}

std::vector<SynonymCandidate> TopKSynonyms(const EmbeddingTable& table,
                                           std::string_view word, std::size_t k,
                                           const FrequencyTable* freq,
                                           const MorphLexicons* lex) {
  std::vector<SynonymCandidate> out;
  const auto index = table.Find(word);
  if (!index || k == 0) return out;
  for (const Neighbor& n : table.Nearest(*index, k)) {
    SynonymCandidate candidate;
    candidate.word = table.Word(n.index);
    candidate.similarity = n.similarity;
    if (freq) candidate.frequency = freq->Frequency(candidate.word);
    if (lex) {
      if (const std::string* tag = lex->TagOf(candidate.word)) candidate.fine_tag = *tag;
    }
    out.push_back(std::move(candidate));
  }
  return out;
}

bool NeighborCache::Covers(const std::vector<Neighbor>& entry,
                           std::size_t k) const {
  return entry.size() >= k || entry.size() + 1 >= table_.size();
}

std::vector<Neighbor> NeighborCache::Get(std::size_t index, std::size_t k) {
  {
    std::shared_lock lock(mu_);
    const auto it = entries_.find(index);
    if (it != entries_.end() && Covers(it->second, k)) {
      const std::size_t n = std::min(k, it->second.size());
      return {it->second.begin(), it->second.begin() + static_cast<std::ptrdiff_t>(n)};
    }
  }
  std::vector<Neighbor> fresh = table_.Nearest(index, k);
  std::unique_lock lock(mu_);
  auto& slot = entries_[index];
  if (fresh.size() > slot.size()) slot = fresh;
  return fresh;
}

void NeighborCache::Prefetch(std::span<const std::size_t> indices, std::size_t k) {
  std::vector<std::size_t> missing;
  {
    std::shared_lock lock(mu_);
    for (std::size_t index : indices) {
      const auto it = entries_.find(index);
      if (it == entries_.end() || !Covers(it->second, k)) missing.push_back(index);
    }
  }
  std::sort(missing.begin(), missing.end());
  missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
  if (missing.empty()) return;
  auto lists = table_.NearestBatch(missing, k);
  std::unique_lock lock(mu_);
  for (std::size_t i = 0; i < missing.size(); ++i) {
    auto& slot = entries_[missing[i]];
    if (lists[i].size() > slot.size()) slot = std::move(lists[i]);
  }
}

std::size_t NeighborCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

}  // namespace lexsimp
