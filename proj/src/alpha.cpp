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

#include "alphagan/alpha.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace alphagan {

AlphaParam::AlphaParam(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument(
        "alpha must be a finite positive real (use AlphaParam::infinity() "
        "for the infinite branch); alpha = 0 is rejected: degenerate loss");
  }
  value_ = a;
}

bool AlphaParam::is_one() const {
  return !is_infinite() && std::abs(value_ - 1.0) < kOneEps;
}

bool AlphaParam::acts_as_tv() const {
  return is_infinite() || value_ >= kTvThreshold;
}

double AlphaParam::rho() const {
  if (is_infinite()) return 1.0;
  if (is_one()) return 0.0;
  return (value_ - 1.0) / value_;
}

AlphaParam AlphaParam::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text == "inf") return infinity();
  std::string buf(text);
  char* end = nullptr;
  double a = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str() || *end != '\0') {
    throw std::invalid_argument("cannot parse alpha from '" + buf +
                                "' (expected a decimal literal or 'inf')");
  }
  return AlphaParam(a);
}

std::string AlphaParam::str() const {
  if (is_infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", value_);
  return buf;
}

}  // namespace alphagan
