// Copyright 2026 The carent Authors
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

#include "carent/quasifree.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "carent/errors.hpp"
#include "carent/pfaffian.hpp"

namespace carent {

QuasifreeState::QuasifreeState(BasePolarization q) : q_(std::move(q)) {}

QuasifreeState::QuasifreeState(BasePolarization q, Flow flow) : q_(std::move(q)), flow_(std::move(flow)) {}

QuasifreeState::QuasifreeState(BasePolarization q, SelfDualHamiltonian h, double beta)
    : q_(std::move(q)) {
  const BasePolarization expected = q_beta(h, beta);
  const double v = relative_violation(q_.matrix() - expected.matrix(), expected.matrix());
  if (v > kDefaultTolerance) {
    std::ostringstream os;
    os << "polarization does not match Q_(beta) for the given h and beta (violation " << v << ")";
    throw ValidationError(os.str(), v);
  }
  flow_ = Flow{std::move(h), beta};
}

QuasifreeState QuasifreeState::kms(const SelfDualHamiltonian& h, double beta) {
  return QuasifreeState(q_beta(h, beta), Flow{h, beta});
}

QuasifreeState QuasifreeState::ground(const SelfDualHamiltonian& h) {
  return QuasifreeState(ground_polarization(h), Flow{h, std::nullopt});
}

double QuasifreeState::beta() const {
  if (!is_kms()) throw DomainError("state carries no KMS flow tag");
  return *flow_->beta;
}

Matrix QuasifreeState::modular_generator() const { return beta() * flow_->h.matrix(); }

Complex n_point(const QuasifreeState& state, std::span<const Vector> fs) {
  const auto n = static_cast<Eigen::Index>(fs.size());
  for (const auto& f : fs) state.polarization().space().require_vector(f);
  if (n % 2 != 0) return Complex(0.0, 0.0);
  if (n == 0) return Complex(1.0, 0.0);

  const BasePolarization& q = state.polarization();
  Matrix a = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      a(j, k) = two_point(q, fs[j], fs[k]);
      a(k, j) = -a(j, k);
    }
  }
  return pfaffian(AntisymmetricMatrix(a));
}

Complex n_point_reference(const QuasifreeState& state, std::span<const Vector> fs) {
  if (fs.size() > 2 * static_cast<std::size_t>(kMaxReferencePairs)) {
    throw ResourceLimitError("n_point_reference is limited to 12 vectors");
  }
  for (const auto& f : fs) state.polarization().space().require_vector(f);
  if (fs.size() % 2 != 0) return Complex(0.0, 0.0);
  const BasePolarization& q = state.polarization();
  return signed_pairing_sum(static_cast<int>(fs.size() / 2),
                            [&](int i, int j) { return two_point(q, fs[i], fs[j]); });
}

}  // namespace carent
