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

#ifndef ALPHAGAN_GOLDEN_HPP_
#define ALPHAGAN_GOLDEN_HPP_

#include <cmath>

namespace alphagan {

struct GoldenResult {
  double x = 0.0;
  double fx = 0.0;
};

// Golden-section minimization of a unimodal function on [lo, hi]. Shrinks
// the bracket until its width drops below tol (or max_iter splits), then
// returns the midpoint. One function evaluation per iteration.
template <typename F>
GoldenResult golden_section_min(F&& f, double lo, double hi,
                                double tol = 1e-10, int max_iter = 200) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  return GoldenResult{x, f(x)};
}

}  // namespace alphagan

#endif  // ALPHAGAN_GOLDEN_HPP_
