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

#ifndef OPK_RNG_HPP
#define OPK_RNG_HPP

#include <cstdint>
#include <vector>

namespace opk {

// Deterministic generator (splitmix64). Reports must be byte-identical for a
// given seed, so we never touch std::rand or platform entropy.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be positive.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool coin() { return (next() & 1u) != 0; }

  // Child generator for trial t; lets suites run trials in any order (or in
  // parallel) while producing identical streams.
  Rng fork(std::uint64_t t) const {
    return Rng(state_ ^ (0x9e3779b97f4a7c15ULL * (t + 0x51ed2701)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace opk

#endif  // OPK_RNG_HPP
