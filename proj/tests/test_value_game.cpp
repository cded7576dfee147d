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

#include "alphagan/equilibrium.hpp"
#include "alphagan/loss.hpp"
#include "alphagan/rng.hpp"
#include "alphagan/value.hpp"

using namespace alphagan;

namespace {

DiscreteDistribution random_positive(Rng& rng, int support) {
  Eigen::ArrayXd w(support);
  for (int i = 0; i < support; ++i) w[i] = rng.uniform(0.05, 1.0);
  return make_discrete(w);
}

DiscriminatorFn random_tabular(Rng& rng, int support) {
  Eigen::ArrayXd d(support);
  for (int i = 0; i < support; ++i) d[i] = rng.uniform(0.01, 0.99);
  return TabularD{std::move(d)};
}

}  // namespace

TEST_CASE("discriminator lookup by atom") {
  const DiscriminatorFn tab = TabularD{Eigen::ArrayXd::LinSpaced(3, 0.1, 0.9)};
  CHECK(discriminator_at(tab, 0) == doctest::Approx(0.1));
  CHECK(discriminator_at(tab, 2) == doctest::Approx(0.9));
  CHECK_THROWS_AS(discriminator_at(tab, 3), std::out_of_range);
  CHECK_THROWS_AS(discriminator_at(tab, -1), std::out_of_range);

  const DiscriminatorFn flat = ConstantD{0.4};
  CHECK(discriminator_at(flat, 0) == 0.4);
  CHECK(discriminator_at(flat, 17) == 0.4);

  CHECK_THROWS_AS(discriminator_at(NeuralD{}, 0), std::invalid_argument);
}

TEST_CASE("discriminator outputs must live in the unit interval") {
  Eigen::ArrayXd bad(2);
  bad << 0.5, 1.5;
  CHECK_THROWS_AS(discriminator_at(TabularD{bad}, 1), std::invalid_argument);
  CHECK_THROWS_AS(discriminator_at(ConstantD{-0.1}, 0), std::invalid_argument);
}

TEST_CASE("an unbiased discriminator pins the value to its floor") {
  // E_p[D^rho] collapses to (1/2)^rho when D is 1/2 everywhere, so the
  // value no longer depends on the distributions at all.
  Rng rng(41);
  const DiscriminatorFn half = ConstantD{0.5};
  for (int i = 0; i < 50; ++i) {
    const int support = 2 + rng.index(8);
    const DiscreteDistribution p = random_positive(rng, support);
    const DiscreteDistribution q = random_positive(rng, support);
    for (double a : {0.3, 0.5, 2.0, 7.0}) {
      const AlphaParam alpha(a);
      CHECK(value_alpha_exact(alpha, p, q, half) ==
            doctest::Approx(objective_floor(alpha)).epsilon(1e-13));
    }
    CHECK(value_alpha_exact(AlphaParam(1.0), p, q, half) ==
          doctest::Approx(-std::log(4.0)).epsilon(1e-13));
    CHECK(value_alpha_exact(AlphaParam::infinity(), p, q, half) ==
          doctest::Approx(-1.0).epsilon(1e-15));
  }
}

TEST_CASE("the tilted discriminator dominates random ones") {
  Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const int support = 2 + rng.index(8);
    const DiscreteDistribution p = random_positive(rng, support);
    const DiscreteDistribution q = random_positive(rng, support);
    for (double a : {0.5, 1.0, 2.0}) {
      const AlphaParam alpha(a);
      const double best =
          value_alpha_exact(alpha, p, q, optimal_discriminator(alpha, p, q));
      CHECK(best >= value_alpha_exact(alpha, p, q, ConstantD{0.5}) - 1e-12);
      CHECK(best >=
            value_alpha_exact(alpha, p, q, random_tabular(rng, support)) -
                1e-12);
    }
  }
}

TEST_CASE("value at the optimum matches a frozen instance") {
  const DiscreteDistribution p = bernoulli(0.5);
  const DiscreteDistribution q = bernoulli(0.0);
  const AlphaParam two(2.0);
  CHECK(value_alpha_exact(two, p, q, optimal_discriminator(two, p, q)) ==
        doctest::Approx(-0.76393202250021030).epsilon(1e-14));
}

TEST_CASE("value identity holds at the optimum") {
  Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    const int support = 2 + rng.index(12);
    const DiscreteDistribution p = random_positive(rng, support);
    const DiscreteDistribution q = random_positive(rng, support);
    for (double a : {0.3, 0.5, 1.0, 2.0, 7.0}) {
      const AlphaParam alpha(a);
      const double at_opt =
          value_alpha_exact(alpha, p, q, optimal_discriminator(alpha, p, q));
      CHECK(std::abs(at_opt - generator_objective(alpha, p, q)) < 1e-10);
    }
    const AlphaParam inf = AlphaParam::infinity();
    const double at_opt =
        value_alpha_exact(inf, p, q, optimal_discriminator(inf, p, q));
    CHECK(std::abs(at_opt - generator_objective(inf, p, q)) < 1e-12);
  }
}

TEST_CASE("small orders stay finite when the optimum saturates") {
  // Zero atoms drive the tilted discriminator to 0 and 1, where rho < 0
  // would otherwise explode; the clamp keeps the value finite and near
  // the objective.
  const DiscreteDistribution p = bernoulli(0.5);
  const DiscreteDistribution q = bernoulli(0.0);
  const AlphaParam alpha(0.5);
  const double v =
      value_alpha_exact(alpha, p, q, optimal_discriminator(alpha, p, q));
  CHECK(std::isfinite(v));
  CHECK(v == doctest::Approx(generator_objective(alpha, p, q)).epsilon(1e-3));
}

TEST_CASE("neural discriminators are rejected on discrete supports") {
  CHECK_THROWS_AS(value_alpha_exact(AlphaParam(1.0), bernoulli(0.5),
                                    bernoulli(0.4), NeuralD{}),
                  std::invalid_argument);
}

TEST_CASE("the sample estimate converges to the exact value") {
  Rng rng(44);
  const DiscreteDistribution p = bernoulli(0.3);
  const DiscreteDistribution q = bernoulli(0.7);
  const int n = 200000;
  const Eigen::MatrixXd real = sample(p, n, rng);
  const Eigen::MatrixXd fake = sample(q, n, rng);
  for (double a : {0.5, 1.0, 2.0}) {
    const AlphaParam alpha(a);
    const DiscriminatorFn d = optimal_discriminator(alpha, p, q);
    const double exact = value_alpha_exact(alpha, p, q, d);
    const double estimate = value_alpha_mc(alpha, real, fake, d);
    CHECK(estimate == doctest::Approx(exact).epsilon(0.01));
  }
}

TEST_CASE("the sample estimate rejects empty batches") {
  const Eigen::MatrixXd empty(0, 1);
  const Eigen::MatrixXd one = Eigen::MatrixXd::Zero(1, 1);
  CHECK_THROWS_AS(
      value_alpha_mc(AlphaParam(1.0), empty, one, ConstantD{0.5}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      value_alpha_mc(AlphaParam(1.0), one, empty, ConstantD{0.5}),
      std::invalid_argument);
}

TEST_CASE("a generic loss reproduces the built-in value function") {
  Rng rng(45);
  for (int i = 0; i < 50; ++i) {
    const int support = 2 + rng.index(8);
    const DiscreteDistribution p = random_positive(rng, support);
    const DiscreteDistribution q = random_positive(rng, support);
    const DiscriminatorFn d = random_tabular(rng, support);
    for (double a : {0.5, 1.0, 2.0}) {
      const AlphaParam alpha(a);
      const BinaryLoss loss = [alpha](int y, double y_hat) {
        return loss_binary(alpha, y, y_hat);
      };
      CHECK(general_loss_value(loss, p, q, d) ==
            doctest::Approx(value_alpha_exact(alpha, p, q, d))
                .epsilon(1e-12));
    }
    const BinaryLoss ipm_loss = [](int y, double y_hat) {
      return loss_binary(AlphaParam::infinity(), y, y_hat);
    };
    CHECK(general_loss_value(ipm_loss, p, q, d) ==
          doctest::Approx(value_alpha_exact(AlphaParam::infinity(), p, q, d))
              .epsilon(1e-12));
  }
}

TEST_CASE("the infinite order value is the mean difference form") {
  Rng rng(46);
  const int support = 4;
  const DiscreteDistribution p = random_positive(rng, support);
  const DiscreteDistribution q = random_positive(rng, support);
  const Eigen::ArrayXd d_table = Eigen::ArrayXd::LinSpaced(support, 0.2, 0.8);
  const double expected =
      (p.probs * d_table).sum() - (q.probs * d_table).sum() - 1.0;
  CHECK(value_alpha_exact(AlphaParam::infinity(), p, q, TabularD{d_table}) ==
        doctest::Approx(expected).epsilon(1e-15));
}
