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

#ifndef CARENT_PFAFFIAN_HPP
#define CARENT_PFAFFIAN_HPP

#include <functional>

#include "carent/linalg.hpp"

namespace carent {

/// Complex antisymmetric matrix of even order. Input is checked against
/// ‖A + Aᵀ‖ <= tol·max(1, ‖A‖) and then stored as (A - Aᵀ)/2.
class AntisymmetricMatrix {
 public:
  explicit AntisymmetricMatrix(const Matrix& a, double tol = kDefaultTolerance);

  Eigen::Index order() const { return a_.rows(); }
  const Matrix& matrix() const { return a_; }

 private:
  Matrix a_;
};

/// Pf(A) by Parlett-Reid tridiagonalization with partial pivoting, O(m³).
Complex pfaffian(const AntisymmetricMatrix& a);

/// Largest m for which the permutation sums below are evaluated.
inline constexpr int kMaxReferencePairs = 6;

/// (-1)^{m(m-1)/2} Σ_{p} sgn(p) Π_j entry(p(j), p(j+m)) over permutations p of
/// {0..2m-1} with p(0) < ... < p(m-1) and p(j) < p(j+m). Indices are zero-based.
/// Throws ResourceLimitError for m > kMaxReferencePairs.
Complex signed_pairing_sum(int m, const std::function<Complex(int, int)>& entry);

/// Pf(A) from the defining permutation sum; for cross-checking pfaffian().
Complex pfaffian_reference(const AntisymmetricMatrix& a);

/// Condition bound above which pfaffian_derivative refuses to invert.
inline constexpr double kMaxCondition = 1e12;

/// d/dt Pf(A + t·Adot) at t = 0, i.e. ½ Pf(A) Tr(A⁻¹ Adot).
Complex pfaffian_derivative(const AntisymmetricMatrix& a, const AntisymmetricMatrix& adot);

}  // namespace carent

#endif  // CARENT_PFAFFIAN_HPP
