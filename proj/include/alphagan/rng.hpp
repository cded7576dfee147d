// Copyright 2026 The alphagan Authors.
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

#ifndef ALPHAGAN_RNG_HPP_
#define ALPHAGAN_RNG_HPP_

#include <cstdint>

namespace alphagan {

// Counter-based generator: the k-th output is a pure function of
// (seed, k), so equal seeds plus equal call sequences reproduce streams
// bit for bit. The finalizer is SplitMix64 over seed + k * golden gamma.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  // Uniform on (0, 1]. Never returns 0, so log(uniform()) is always finite.
  double uniform();

  // Uniform on [lo, hi).
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller with a cached spare.
  double gaussian();

  // Uniform integer in [0, n).
  int index(int n);

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace alphagan

#endif  // ALPHAGAN_RNG_HPP_
