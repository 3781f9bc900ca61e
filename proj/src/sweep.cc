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

#include "lexsimp/sweep.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "lexsimp/parallel.h"

namespace lexsimp {

std::vector<SweepPoint> RunSweep(const Dataset& data, std::vector<Count> nf_grid,
                                 std::vector<std::size_t> ns_grid,
                                 const Resources& resources,
                                 const SimplifyConfig& base, std::size_t threads) {
  if (nf_grid.empty() || ns_grid.empty()) {
    throw std::invalid_argument("sweep grids must be non-empty");
  }
  std::sort(nf_grid.begin(), nf_grid.end());
  std::sort(ns_grid.begin(), ns_grid.end());

  // Tagging and lemmatization do not depend on (n_f, n_s): do them once.
  SimplifyConfig widest = base;
  widest.n_f = nf_grid.back();
  widest.n_s = ns_grid.back();
  NeighborCache cache(resources.embeddings);
  const Simplifier analyzer(resources, widest, &cache);
  std::vector<std::vector<Token>> analyzed(data.size());
  std::vector<std::size_t> lemma_changes(data.size());
  ParallelFor(data.size(), threads, [&](std::size_t i) {
    analyzed[i] = analyzer.Analyze(data.examples[i].text, &lemma_changes[i]);
  });
  analyzer.Prefetch(analyzed);

  std::vector<SweepPoint> points(nf_grid.size() * ns_grid.size());
  ParallelFor(points.size(), threads, [&](std::size_t p) {
    SimplifyConfig cfg = base;
    cfg.n_f = nf_grid[p / ns_grid.size()];
    cfg.n_s = ns_grid[p % ns_grid.size()];
    const Simplifier simplifier(resources, cfg, &cache);
    CorpusStats stats;
    SimplifyResult result;
    for (std::size_t i = 0; i < data.size(); ++i) {
      result.tokens = analyzed[i];
      result.lemma_changes = lemma_changes[i];
      result.replacements = simplifier.ReplaceRareWords(result.tokens);
      stats.Add(result);
    }
    points[p] = {cfg.n_f,
                 cfg.n_s,
                 stats.replaced_fraction(),
                 stats.lemma_fraction(),
                 stats.mean_similarity(),
                 stats.mean_freq_gain()};
  });
  return points;
}

void WriteSweepCsv(const std::vector<SweepPoint>& points, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  char buf[160];
  for (const SweepPoint& p : points) {
    std::snprintf(buf, sizeof(buf), "%llu,%zu,%.6f,%.6f,%.6f,%.6f\n",
                  static_cast<unsigned long long>(p.n_f), p.n_s,
                  p.replaced_fraction, p.lemma_fraction, p.mean_similarity,
                  p.mean_freq_gain);
    out << buf;
  }
}

}  // namespace lexsimp
