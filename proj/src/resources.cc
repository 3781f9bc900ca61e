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

#include "lexsimp/resources.h"

namespace lexsimp {

Resources LoadResources(const ResourcePaths& paths) {
  Resources resources;
  if (!paths.frequency.empty()) {
    resources.frequency = LoadFrequencyTable(paths.frequency);
  }
  if (!paths.embeddings.empty()) {
    resources.embeddings = LoadEmbeddings(paths.embeddings);
  }
  resources.lexicons = LoadMorphLexicons(paths.tag_lexicon, paths.noun_exceptions,
                                         paths.verb_exceptions);
  return resources;
}

}  // namespace lexsimp
