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

// Corpus statistics over an (n_f, n_s) grid.

#ifndef LEXSIMP_SWEEP_H_
#define LEXSIMP_SWEEP_H_

#include <cstddef>
#include <ostream>
#include <vector>

#include "lexsimp/corpus.h"
#include "lexsimp/resources.h"
#include "lexsimp/simplify.h"

namespace lexsimp {

inline constexpr char kSweepCsvHeader[] =
    "n_f,n_s,replaced_fraction,lemma_fraction,mean_similarity,mean_freq_gain";

struct SweepPoint {
  Count n_f = 0;
  std::size_t n_s = 0;
  double replaced_fraction = 0.0;
  double lemma_fraction = 0.0;
  double mean_similarity = 0.0;
  double mean_freq_gain = 0.0;
};

// One point per grid pair, ordered by (n_f, n_s) ascending. `base` supplies
// mode, require_gain and preserve_case. Throws std::invalid_argument when a
// grid is empty.
std::vector<SweepPoint> RunSweep(const Dataset& data, std::vector<Count> nf_grid,
                                 std::vector<std::size_t> ns_grid,
                                 const Resources& resources,
                                 const SimplifyConfig& base = {},
                                 std::size_t threads = 1);

void WriteSweepCsv(const std::vector<SweepPoint>& points, std::ostream& out);

}  // namespace lexsimp

#endif  // LEXSIMP_SWEEP_H_
