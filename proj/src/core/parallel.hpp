/*
   Copyright 2026 The qhl authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QHL_PARALLEL_HPP
#define QHL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qhl {

/// Worker count: hardware concurrency capped by the QHL_THREADS environment
/// variable (values < 1 mean serial).
std::size_t num_threads();

/// Runs fn(i) for i in [0, n) across workers. Chunks are static so that any
/// per-chunk accumulation can be merged in a fixed order by the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace qhl

#endif
