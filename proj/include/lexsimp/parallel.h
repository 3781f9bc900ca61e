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

#ifndef LEXSIMP_PARALLEL_H_
#define LEXSIMP_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace lexsimp {

// Calls fn(i) for every i in [0, n) using up to `threads` workers (the
// caller's thread included). Items are claimed dynamically, so fn must only
// write to per-item state. The first exception thrown by any call is
// rethrown after all workers stop.
void ParallelFor(std::size_t n, std::size_t threads,
                 const std::function<void(std::size_t)>& fn);

}  // namespace lexsimp

#endif  // LEXSIMP_PARALLEL_H_
