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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "alphagan/loss.hpp"

using namespace alphagan;

TEST_CASE("order one is the log loss") {
  for (double p : {0.1, 0.25, 0.5, 0.9, 1.0}) {
    CHECK(loss_prob(AlphaParam(1.0), p) == -std::log(p));
  }
}

TEST_CASE("infinite order is the linear loss") {
  for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
    CHECK(loss_prob(AlphaParam::infinity(), p) == 1.0 - p);
  }
}

TEST_CASE("finite orders match the closed form") {
  // (alpha/(alpha-1)) (1 - p^((alpha-1)/alpha)) at alpha = 2 and 1/2.
  CHECK(loss_prob(AlphaParam(2.0), 0.5) ==
        doctest::Approx(0.58578643762690495).epsilon(1e-14));
  CHECK(loss_prob(AlphaParam(0.5), 0.5) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(loss_prob(AlphaParam(0.5), 0.25) ==
        doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("every order vanishes at a confident correct report") {
  for (double a : {0.3, 0.5, 1.0, 2.0, 10.0}) {
    CHECK(loss_prob(AlphaParam(a), 1.0) == 0.0);
  }
  CHECK(loss_prob(AlphaParam::infinity(), 1.0) == 0.0);
}

TEST_CASE("loss decreases as the reported probability rises") {
  for (double a : {0.3, 0.5, 1.0, 2.0, 10.0}) {
    const AlphaParam alpha(a);
    double previous = loss_prob(alpha, 0.05);
    for (double p = 0.1; p <= 1.0; p += 0.05) {
      const double current = loss_prob(alpha, p);
      CHECK(current < previous);
      previous = current;
    }
  }
}

TEST_CASE("orders near one fall into the exact log branch") {
  CHECK(loss_prob(AlphaParam(1.0 + 1e-12), 0.3) == -std::log(0.3));
  CHECK(loss_prob(AlphaParam(1.0 - 1e-12), 0.3) == -std::log(0.3));
}

TEST_CASE("huge finite orders approach the linear loss") {
  for (double p : {0.1, 0.5, 0.9}) {
    CHECK(loss_prob(AlphaParam(1e7), p) ==
          doctest::Approx(1.0 - p).epsilon(1e-6));
  }
}

TEST_CASE("zero reports are clamped only where the loss blows up") {
  bool clamped = false;
  const double at_zero = loss_prob(AlphaParam(1.0), 0.0, &clamped);
  CHECK(clamped);
  CHECK(at_zero == doctest::Approx(-std::log(1e-12)));

  clamped = false;
  const double small_order = loss_prob(AlphaParam(0.5), 0.0, &clamped);
  CHECK(clamped);
  CHECK(std::isfinite(small_order));

  clamped = true;
  CHECK(loss_prob(AlphaParam(2.0), 0.0, &clamped) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK_FALSE(clamped);

  clamped = true;
  CHECK(loss_prob(AlphaParam::infinity(), 0.0, &clamped) == 1.0);
  CHECK_FALSE(clamped);
}

TEST_CASE("reports outside the unit interval are rejected") {
  CHECK_THROWS_AS(loss_prob(AlphaParam(1.0), -0.01), std::out_of_range);
  CHECK_THROWS_AS(loss_prob(AlphaParam(1.0), 1.01), std::out_of_range);
  CHECK_THROWS_AS(loss_prob(AlphaParam(1.0), std::nan("")), std::out_of_range);
}

TEST_CASE("binary loss scores the probability of the true label") {
  const AlphaParam two(2.0);
  CHECK(loss_binary(two, 1, 0.8) == loss_prob(two, 0.8));
  CHECK(loss_binary(two, 0, 0.8) == loss_prob(two, 0.2));
  CHECK_THROWS_AS(loss_binary(two, 2, 0.5), std::out_of_range);
  CHECK_THROWS_AS(loss_binary(two, -1, 0.5), std::out_of_range);
}

TEST_CASE("margin loss is the probability loss through the sigmoid") {
  const AlphaParam one(1.0);
  for (double t : {-3.0, -0.5, 0.0, 0.5, 3.0}) {
    CHECK(loss_margin(one, t) ==
          doctest::Approx(std::log1p(std::exp(-t))).epsilon(1e-12));
  }
  CHECK(loss_margin(AlphaParam(2.0), 0.0) == loss_prob(AlphaParam(2.0), 0.5));
}

TEST_CASE("margin loss handles infinite margins") {
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(loss_margin(AlphaParam(2.0), inf) == 0.0);
  CHECK(loss_margin(AlphaParam::infinity(), inf) == 0.0);
  CHECK(loss_margin(AlphaParam(2.0), -inf) ==
        loss_prob(AlphaParam(2.0), 0.0));
  CHECK(loss_margin(AlphaParam::infinity(), -inf) == 1.0);
}

TEST_CASE("margin loss decreases in the margin") {
  for (double a : {0.5, 1.0, 2.0, 10.0}) {
    const AlphaParam alpha(a);
    double previous = loss_margin(alpha, -5.0);
    for (double t = -4.5; t <= 5.0; t += 0.5) {
      const double current = loss_margin(alpha, t);
      CHECK(current < previous);
      previous = current;
    }
  }
}

TEST_CASE("sigmoid is stable far into both tails") {
  CHECK(sigmoid(0.0) == 0.5);
  CHECK(sigmoid(700.0) == 1.0);
  CHECK(sigmoid(-700.0) == doctest::Approx(0.0));
  CHECK(sigmoid(-700.0) > 0.0);
  CHECK(sigmoid(3.0) + sigmoid(-3.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("the uniform guess is the worst fixed report") {
  for (double a : {0.3, 0.5, 1.0, 2.0, 10.0}) {
    const UniformGuessReport report =
        check_uniform_guess_condition(AlphaParam(a), 101);
    CHECK(report.holds);
    CHECK(report.worst_violation <= 1e-12);
  }
  const UniformGuessReport at_inf =
      check_uniform_guess_condition(AlphaParam::infinity(), 101);
  CHECK(at_inf.holds);
}

TEST_CASE("the uniform guess check needs a real grid") {
  CHECK_THROWS_AS(check_uniform_guess_condition(AlphaParam(1.0), 2),
                  std::invalid_argument);
  CHECK_NOTHROW(check_uniform_guess_condition(AlphaParam(1.0), 3));
}
