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

#ifndef CARENT_QUASIFREE_HPP
#define CARENT_QUASIFREE_HPP

#include <optional>
#include <span>

#include "carent/one_particle.hpp"

namespace carent {

/// Dynamics tag of a quasifree state: the one-particle generator and, for
/// KMS states, the inverse temperature (absent for the ground state).
struct Flow {
  SelfDualHamiltonian h;
  std::optional<double> beta;
};

/// Quasifree state determined by its base polarization Q.
class QuasifreeState {
 public:
  /// Untagged state from an explicit polarization.
  explicit QuasifreeState(BasePolarization q);

  /// Tagged state; Q is recomputed from (h, beta) and must agree with `q` to 1e-10.
  QuasifreeState(BasePolarization q, SelfDualHamiltonian h, double beta);

  /// Quasifree KMS state with Q = Q_(β).
  static QuasifreeState kms(const SelfDualHamiltonian& h, double beta);
  /// Quasifree ground state with Q = E((0, ∞)).
  static QuasifreeState ground(const SelfDualHamiltonian& h);

  const BasePolarization& polarization() const { return q_; }
  const std::optional<Flow>& flow() const { return flow_; }
  bool is_kms() const { return flow_.has_value() && flow_->beta.has_value(); }

  /// Generator of the modular flow, β·h. Throws DomainError if the state is not KMS-tagged.
  Matrix modular_generator() const;
  double beta() const;

 private:
  QuasifreeState(BasePolarization q, Flow flow);

  BasePolarization q_;
  std::optional<Flow> flow_;
};

/// ω(B(f_1)⋯B(f_n)): 0 for odd n, otherwise the Pfaffian of the matrix with
/// upper entries W²(f_j, f_k).
Complex n_point(const QuasifreeState& state, std::span<const Vector> fs);

/// Same value from the defining signed permutation sum (at most 12 vectors).
Complex n_point_reference(const QuasifreeState& state, std::span<const Vector> fs);

}  // namespace carent

#endif  // CARENT_QUASIFREE_HPP
