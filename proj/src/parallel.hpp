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
#ifndef TRIMAT_SRC_PARALLEL_HPP
#define TRIMAT_SRC_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace trimat::detail {

// Runs f(0..n-1) on up to `workers` threads. Callers write results by index,
// so output order never depends on scheduling.
template <class F>
void parallel_for(std::size_t n, int workers, F&& f) {
  const std::size_t w = static_cast<std::size_t>(std::max(1, workers));
  if (w == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(w, n); ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += w) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace trimat::detail

#endif  // TRIMAT_SRC_PARALLEL_HPP
