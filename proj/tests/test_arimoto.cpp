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
#include <vector>

#include "alphagan/arimoto.hpp"
#include "alphagan/distributions.hpp"
#include "alphagan/rng.hpp"

using namespace alphagan;

namespace {

DiscreteDistribution random_dist(Rng& rng, int support) {
  for (;;) {
    Eigen::ArrayXd w(support);
    bool any = false;
    for (int i = 0; i < support; ++i) {
      w[i] = rng.uniform() < 0.125 ? 0.0 : rng.uniform(0.0, 1.0);
      any = any || w[i] > 0.0;
    }
    if (any) return make_discrete(w);
  }
}

}  // namespace

TEST_CASE("power mean degenerates correctly at the edges") {
  CHECK(power_mean(2.0, 3.0, 0.0) == 3.0);
  CHECK(power_mean(2.0, 0.0, 3.0) == 3.0);
  CHECK(power_mean(1.0, 2.0, 5.0) == doctest::Approx(7.0).epsilon(1e-15));
  CHECK(power_mean(2.0, 1.0, 1.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("power mean survives extreme orders without overflow") {
  CHECK(power_mean(1000.0, 2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::isfinite(power_mean(1e6, 1e-300, 1e-300)));
  CHECK(power_mean(1e6, 1e-300, 1e-300) >= 1e-300);
  CHECK(std::isfinite(power_mean(0.1, 1e-12, 0.9)));
}

TEST_CASE("generator curve is zero at one for every order") {
  for (double a : {0.2, 0.5, 1.0, 2.0, 7.0, 100.0}) {
    CHECK(std::abs(f_alpha(AlphaParam(a), 1.0)) < 1e-15);
  }
  CHECK(f_alpha(AlphaParam::infinity(), 1.0) == 0.0);
}

TEST_CASE("generator curve matches frozen spot values") {
  CHECK(f_alpha(AlphaParam(2.0), 0.0) ==
        doctest::Approx(1.1715728752538099).epsilon(1e-14));
  CHECK(f_alpha(AlphaParam(1.0), std::exp(1.0)) ==
        doctest::Approx(0.41252132567224175).epsilon(1e-14));
  CHECK(f_alpha(AlphaParam(1.0), 0.0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("infinite-order generator curve is the hinge") {
  CHECK(f_alpha(AlphaParam::infinity(), 0.5) == 0.5);
  CHECK(f_alpha(AlphaParam::infinity(), 0.0) == 1.0);
  CHECK(f_alpha(AlphaParam::infinity(), 2.0) == 0.0);
  CHECK(f_alpha(AlphaParam::infinity(), 7.0) == 0.0);
  // Orders past the routing threshold behave identically.
  CHECK(f_alpha(AlphaParam(1e9), 0.5) == 0.5);
}

TEST_CASE("generator curve rejects negative ratios") {
  CHECK_THROWS_AS(f_alpha(AlphaParam(2.0), -0.1), std::invalid_argument);
}

TEST_CASE("generator curve is convex on a grid") {
  for (double a : {0.3, 0.5, 1.0, 2.0, 10.0, 100.0}) {
    const AlphaParam alpha(a);
    const double h = 0.05;
    for (double u = h; u <= 4.0; u += h) {
      const double second = f_alpha(alpha, u - h) - 2.0 * f_alpha(alpha, u) +
                            f_alpha(alpha, u + h);
      CHECK(second >= -1e-12);
    }
  }
}

TEST_CASE("divergence matches frozen Bernoulli values") {
  const DiscreteDistribution fair = bernoulli(0.5);
  const DiscreteDistribution sure = bernoulli(0.0);
  CHECK(arimoto_divergence(AlphaParam(2.0), fair, sure).value ==
        doctest::Approx(0.40764085275359960).epsilon(1e-14));
  CHECK(arimoto_divergence(AlphaParam(0.5), fair, sure).value ==
        doctest::Approx(0.58578643762690495).epsilon(1e-13));
}

TEST_CASE("divergence echoes its order and counts clamped terms") {
  const DivergenceValue v =
      arimoto_divergence(AlphaParam(2.0), bernoulli(0.5), bernoulli(0.4));
  CHECK(v.alpha == AlphaParam(2.0));
  CHECK(v.clamped_terms >= 0);
}

TEST_CASE("divergence is symmetric and zero exactly at equality") {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const int support = 2 + rng.index(10);
    const DiscreteDistribution p = random_dist(rng, support);
    const DiscreteDistribution q = random_dist(rng, support);
    for (double a : {0.3, 1.0, 2.0}) {
      const AlphaParam alpha(a);
      const double pq = arimoto_divergence(alpha, p, q).value;
      const double qp = arimoto_divergence(alpha, q, p).value;
      CHECK(pq >= 0.0);
      CHECK(pq == doctest::Approx(qp).epsilon(1e-12));
      const double self = arimoto_divergence(alpha, p, p).value;
      CHECK(self >= 0.0);
      CHECK(self <= 1e-12);
    }
  }
}

TEST_CASE("divergence demands a shared support") {
  CHECK_THROWS_AS(
      arimoto_divergence(AlphaParam(1.0), bernoulli(0.5),
                         make_discrete(std::vector<double>{1.0, 1.0, 1.0})),
      SupportMismatch);
}

TEST_CASE("order one doubles the Jensen-Shannon divergence") {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    const int support = 2 + rng.index(10);
    const DiscreteDistribution p = random_dist(rng, support);
    const DiscreteDistribution q = random_dist(rng, support);
    CHECK(arimoto_divergence(AlphaParam(1.0), p, q).value ==
          doctest::Approx(2.0 * jsd(p, q)).epsilon(1e-12));
  }
}

TEST_CASE("order one half is the squared Hellinger sum") {
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const int support = 2 + rng.index(10);
    const DiscreteDistribution p = random_dist(rng, support);
    const DiscreteDistribution q = random_dist(rng, support);
    CHECK(arimoto_divergence(AlphaParam(0.5), p, q).value ==
          doctest::Approx(sq_hellinger(p, q)).epsilon(5e-12));
  }
}

TEST_CASE("the infinite order is total variation") {
  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    const int support = 2 + rng.index(10);
    const DiscreteDistribution p = random_dist(rng, support);
    const DiscreteDistribution q = random_dist(rng, support);
    const double t = tv(p, q);
    CHECK(arimoto_divergence(AlphaParam::infinity(), p, q).value == t);
    CHECK(arimoto_divergence(AlphaParam(1e9), p, q).value == t);
    CHECK(arimoto_divergence(AlphaParam(1e4), p, q).value ==
          doctest::Approx(t).epsilon(1e-3));
  }
}

TEST_CASE("jsd matches frozen values and its ceiling") {
  CHECK(jsd(bernoulli(0.5), bernoulli(0.0)) ==
        doctest::Approx(0.21576155433883570).epsilon(1e-14));
  CHECK(jsd(bernoulli(0.0), bernoulli(1.0)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(jsd(bernoulli(0.3), bernoulli(0.3)) == 0.0);
  Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    const DiscreteDistribution p = random_dist(rng, 4);
    const DiscreteDistribution q = random_dist(rng, 4);
    const double v = jsd(p, q);
    CHECK(v >= 0.0);
    CHECK(v <= std::log(2.0) + 1e-15);
  }
}

TEST_CASE("tv is the halved absolute mass difference") {
  CHECK(tv(bernoulli(0.5), bernoulli(0.0)) == 0.5);
  CHECK(tv(bernoulli(0.0), bernoulli(1.0)) == 1.0);
  CHECK(tv(bernoulli(0.2), bernoulli(0.2)) == 0.0);
  CHECK(tv(bernoulli(0.5), bernoulli(0.6)) ==
        doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("psi matches its boundary contract") {
  for (double a : {0.2, 0.5, 1.0, 2.0, 5.0, 100.0}) {
    const AlphaParam alpha(a);
    CHECK(psi_alpha(alpha, 0.0) == 0.0);
    const double c = a / (a - 1.0);
    if (a != 1.0) {
      CHECK(psi_alpha(alpha, 1.0) ==
            doctest::Approx(c * (2.0 - std::pow(2.0, 1.0 / a)))
                .epsilon(1e-13));
    }
  }
  CHECK(psi_alpha(AlphaParam(1.0), 1.0) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
  CHECK(psi_alpha(AlphaParam(2.0), 0.5) ==
        doctest::Approx(0.33385053542218923).epsilon(1e-14));
  CHECK(psi_alpha(AlphaParam::infinity(), 0.37) == 0.37);
}

TEST_CASE("psi is increasing and rejects arguments off [0, 1]") {
  for (double a : {0.5, 1.0, 2.0}) {
    const AlphaParam alpha(a);
    double previous = psi_alpha(alpha, 0.0);
    for (double x = 0.05; x <= 1.0; x += 0.05) {
      const double current = psi_alpha(alpha, x);
      CHECK(current >= previous);
      previous = current;
    }
  }
  CHECK_THROWS_AS(psi_alpha(AlphaParam(1.0), -0.1), std::out_of_range);
  CHECK_THROWS_AS(psi_alpha(AlphaParam(1.0), 1.1), std::out_of_range);
}

TEST_CASE("divergence sits inside the psi sandwich") {
  Rng rng(36);
  for (int i = 0; i < 500; ++i) {
    const int support = 2 + rng.index(10);
    const DiscreteDistribution p = random_dist(rng, support);
    const DiscreteDistribution q = random_dist(rng, support);
    const double t = tv(p, q);
    for (double a : {0.2, 0.5, 1.0, 2.0, 100.0}) {
      const AlphaParam alpha(a);
      const double d = arimoto_divergence(alpha, p, q).value;
      CHECK(psi_alpha(alpha, t) <= d + 1e-12);
      CHECK(d <= psi_alpha(alpha, 1.0) * t + 1e-12);
    }
  }
}

TEST_CASE("metric power uses the exponent min(alpha, one half)") {
  const DiscreteDistribution p = bernoulli(0.5);
  const DiscreteDistribution q = bernoulli(0.1);
  const double d2 = arimoto_divergence(AlphaParam(2.0), p, q).value;
  CHECK(metric_power(AlphaParam(2.0), p, q) ==
        doctest::Approx(std::sqrt(d2)).epsilon(1e-15));
  const double d_quarter = arimoto_divergence(AlphaParam(0.25), p, q).value;
  CHECK(metric_power(AlphaParam(0.25), p, q) ==
        doctest::Approx(std::pow(d_quarter, 0.25)).epsilon(1e-15));
  const double d_inf = arimoto_divergence(AlphaParam::infinity(), p, q).value;
  CHECK(metric_power(AlphaParam::infinity(), p, q) ==
        doctest::Approx(std::sqrt(d_inf)).epsilon(1e-15));
}

TEST_CASE("powered divergence satisfies the triangle inequality") {
  Rng rng(37);
  for (int i = 0; i < 500; ++i) {
    const int support = 2 + rng.index(6);
    const DiscreteDistribution a = random_dist(rng, support);
    const DiscreteDistribution b = random_dist(rng, support);
    const DiscreteDistribution c = random_dist(rng, support);
    for (double order : {0.25, 0.5, 1.0, 2.0}) {
      const AlphaParam alpha(order);
      CHECK(metric_power(alpha, a, c) <=
            metric_power(alpha, a, b) + metric_power(alpha, b, c) + 1e-12);
    }
    const AlphaParam inf = AlphaParam::infinity();
    CHECK(metric_power(inf, a, c) <=
          metric_power(inf, a, b) + metric_power(inf, b, c) + 1e-12);
  }
}
