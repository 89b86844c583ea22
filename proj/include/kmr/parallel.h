// Copyright 2026 The Authors.
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

#ifndef KMR_PARALLEL_H_
#define KMR_PARALLEL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

namespace kmr {

// Number of workers used when a caller passes 0.
unsigned default_workers();

// Runs fn(i) for i in [0, n) on up to `workers` threads. Exceptions thrown by
// fn are rethrown (the one from the smallest index).
void parallel_for(size_t n, unsigned workers, const std::function<void(size_t)>& fn);

// Smallest i in [0, n) with pred(i) true, or nullopt. Indices above the
// current best are skipped once a success is known, so the answer does not
// depend on the number of workers.
std::optional<size_t> parallel_find_first(size_t n, unsigned workers,
                                          const std::function<bool(size_t)>& pred);

// Stateless 64-bit mixer used to derive per-task seeds.
uint64_t mix_seed(uint64_t seed, uint64_t index);

}  // namespace kmr

#endif  // KMR_PARALLEL_H_
