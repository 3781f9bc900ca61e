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

#ifndef LEXSIMP_RESOURCES_H_
#define LEXSIMP_RESOURCES_H_

#include <string>

#include "lexsimp/embeddings.h"
#include "lexsimp/lexicon.h"
#include "lexsimp/morphology.h"

namespace lexsimp {

struct ResourcePaths {
  std::string frequency;
  std::string embeddings;
  std::string tag_lexicon;
  std::string noun_exceptions;
  std::string verb_exceptions;
};

// Read-only after loading; share freely across threads.
struct Resources {
  FrequencyTable frequency;
  EmbeddingTable embeddings;
  MorphLexicons lexicons;
};

// Empty paths yield empty tables.
Resources LoadResources(const ResourcePaths& paths);

}  // namespace lexsimp

#endif  // LEXSIMP_RESOURCES_H_
