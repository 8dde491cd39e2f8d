// Copyright 2026 The opk authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPK_PARALLEL_HPP
#define OPK_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace opk {

/// OPK_THREADS caps the worker count; defaults to the hardware limit.
inline int thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  hw = std::min(hw, 8);
  if (const char* env = std::getenv("OPK_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  return hw;
}

/// Runs fn(t) for t in [0, trials), possibly concurrently, and returns the
/// results indexed by trial.  Each trial must derive its randomness from its
/// index, so the outcome is independent of the schedule.
template <class T, class Fn>
std::vector<T> run_trials(int trials, Fn fn) {
  std::vector<T> results(trials);
  int workers = std::min(thread_count(), std::max(trials, 1));
  if (workers <= 1) {
    for (int t = 0; t < trials; ++t) results[t] = fn(t);
    return results;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) results[t] = fn(t);
    });
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace opk

#endif  // OPK_PARALLEL_HPP
