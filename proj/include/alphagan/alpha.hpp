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

#ifndef ALPHAGAN_ALPHA_HPP_
#define ALPHAGAN_ALPHA_HPP_

#include <limits>
#include <string>
#include <string_view>

namespace alphagan {

// Validated loss order: either a finite positive real or the infinity
// branch. The order alpha = 0 is rejected at construction: the loss it
// would induce is identically infinite and nothing downstream can use it.
class AlphaParam {
 public:
  // Tolerance for routing to the closed form at one. The generic formula
  // loses digits like 1/|alpha - 1| near one, so exact-one callers must
  // land on the dedicated branch.
  static constexpr double kOneEps = 1e-9;
  // Finite orders at or above this behave as the infinite branch inside
  // divergence computations (the generic branch stops being resolvable
  // in double precision long before this point matters).
  static constexpr double kTvThreshold = 1e8;

  // Finite order. Throws std::invalid_argument unless 0 < a < infinity.
  explicit AlphaParam(double a);

  static AlphaParam infinity() {
    AlphaParam p;
    p.value_ = std::numeric_limits<double>::infinity();
    return p;
  }

  bool is_infinite() const { return value_ == std::numeric_limits<double>::infinity(); }
  bool is_one() const;

  // True when divergence-level code should take the total-variation form:
  // the infinity branch or a finite order at or above kTvThreshold.
  bool acts_as_tv() const;

  // The numeric order; +infinity on the infinity branch.
  double value() const { return value_; }

  // (alpha - 1) / alpha; 0 at one, 1 on the infinity branch.
  double rho() const;

  // Accepts a decimal literal or the token "inf". Throws
  // std::invalid_argument on anything else.
  static AlphaParam parse(std::string_view text);

  // "inf" or a short decimal rendering, stable across runs.
  std::string str() const;

  friend bool operator==(const AlphaParam&, const AlphaParam&) = default;

 private:
  AlphaParam() = default;
  double value_ = 1.0;
};

}  // namespace alphagan

#endif  // ALPHAGAN_ALPHA_HPP_
