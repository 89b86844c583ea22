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

#include "kmr/parallel.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kmr {

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

namespace {

void run_workers(unsigned workers, size_t n, const std::function<void()>& body) {
  unsigned w = workers == 0 ? default_workers() : workers;
  w = static_cast<unsigned>(std::min<size_t>(w, n));
  if (w <= 1) {
    body();
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (unsigned i = 0; i < w; ++i) threads.emplace_back(body);
  for (auto& th : threads) th.join();
}

}  // namespace

void parallel_for(size_t n, unsigned workers, const std::function<void(size_t)>& fn) {
  std::atomic<size_t> next{0};
  std::mutex mu;
  size_t err_index = SIZE_MAX;
  std::exception_ptr err;
  run_workers(workers, n, [&] {
    for (size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  });
  if (err) std::rethrow_exception(err);
}

std::optional<size_t> parallel_find_first(size_t n, unsigned workers,
                                          const std::function<bool(size_t)>& pred) {
  std::atomic<size_t> next{0};
  std::atomic<size_t> best{SIZE_MAX};
  std::mutex mu;
  size_t err_index = SIZE_MAX;
  std::exception_ptr err;
  run_workers(workers, n, [&] {
    for (size_t i; (i = next.fetch_add(1)) < n;) {
      if (i > best.load()) break;
      try {
        if (pred(i)) {
          size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < err_index) {
          err_index = i;
          err = std::current_exception();
        }
      }
    }
  });
  size_t b = best.load();
  if (err && err_index < b) std::rethrow_exception(err);
  if (b == SIZE_MAX) return std::nullopt;
  return b;
}

uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace kmr
