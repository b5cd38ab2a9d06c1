// Copyright 2026 The qem-bench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QEM_PARALLEL_HPP_
#define QEM_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace qem {

// Worker cap: QEM_BENCH_THREADS if set (>= 1), otherwise the hardware
// concurrency.
int max_threads();

// Runs fn(0) .. fn(count-1) on up to max_threads() workers. Tasks must write
// to disjoint slots; the first exception is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qem

#endif  // QEM_PARALLEL_HPP_
