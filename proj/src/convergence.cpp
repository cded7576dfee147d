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

#include "alphagan/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alphagan/arimoto.hpp"

namespace alphagan {

DiscreteDistribution element_at(const DistSequence& seq, int n) {
  if (n < 1 || n > seq.length) {
    throw std::out_of_range("element_at: index outside [1, length]");
  }
  if (const auto* drift = std::get_if<BernoulliDrift>(&seq.kind)) {
    double theta =
        drift->theta_star + (drift->theta_start - drift->theta_star) / n;
    return bernoulli(theta);
  }
  if (const auto* mix = std::get_if<ShrinkingMixture>(&seq.kind)) {
    require_same_support(mix->base, mix->noise);
    double w = 1.0 / n;
    return make_discrete(
        Eigen::ArrayXd((1.0 - w) * mix->base.probs + w * mix->noise.probs));
  }
  const auto& custom = std::get<CustomSequence>(seq.kind);
  if (n > static_cast<int>(custom.dists.size())) {
    throw std::out_of_range("element_at: custom sequence shorter than length");
  }
  return custom.dists[n - 1];
}

Eigen::MatrixXd divergence_trace(const DistSequence& seq,
                                 const DiscreteDistribution& target,
                                 const std::vector<AlphaParam>& alphas) {
  if (seq.length < 1) {
    throw std::invalid_argument("divergence_trace: empty sequence");
  }
  if (alphas.empty()) {
    throw std::invalid_argument("divergence_trace: empty alpha list");
  }
  Eigen::MatrixXd trace(seq.length, static_cast<int>(alphas.size()));
  for (int n = 1; n <= seq.length; ++n) {
    DiscreteDistribution p_n = element_at(seq, n);
    require_same_support(p_n, target);
    for (std::size_t j = 0; j < alphas.size(); ++j) {
      trace(n - 1, static_cast<int>(j)) =
          arimoto_divergence(alphas[j], p_n, target).value;
    }
  }
  return trace;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::both_converge:
      return "both_converge";
    case Verdict::neither_converges:
      return "neither_converges";
    case Verdict::violation:
      return "violation";
  }
  return "unknown";
}

Verdict equivalence_check(const DistSequence& seq,
                          const DiscreteDistribution& target,
                          AlphaParam alpha1, AlphaParam alpha2, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("equivalence_check: tol must be positive");
  }
  Eigen::MatrixXd trace = divergence_trace(seq, target, {alpha1, alpha2});
  const int n = static_cast<int>(trace.rows());
  const int tail = std::max(1, n / 10);
  double tail_max_1 = trace.col(0).tail(tail).maxCoeff();
  double tail_max_2 = trace.col(1).tail(tail).maxCoeff();
  bool conv1 = tail_max_1 < tol;
  bool conv2 = tail_max_2 < tol;
  if (conv1 && conv2) return Verdict::both_converge;
  if (!conv1 && !conv2) return Verdict::neither_converges;
  return Verdict::violation;
}

bool lin_bound_check(
    const std::vector<std::pair<DiscreteDistribution, DiscreteDistribution>>&
        pairs) {
  for (const auto& [p, q] : pairs) {
    if (jsd(p, q) > std::log(2.0) * tv(p, q) + 1e-12) return false;
  }
  return true;
}

}  // namespace alphagan
