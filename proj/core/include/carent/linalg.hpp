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

#ifndef CARENT_LINALG_HPP
#define CARENT_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>

#include <Eigen/Dense>

namespace carent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Default relative Frobenius tolerance used by every validation gate.
inline constexpr double kDefaultTolerance = 1e-10;

/// ‖residual‖_F / max(1, ‖reference‖_F).
inline double relative_violation(const Matrix& residual, const Matrix& reference) {
  const double scale = std::max(1.0, reference.norm());
  return residual.norm() / scale;
}

/// Eigenvalues in ascending order, orthonormal eigenvectors as columns.
struct HermitianEigen {
  RealVector values;
  Matrix vectors;
};

inline HermitianEigen hermitian_eigen(const Matrix& m) {
  const Matrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// V diag(fn(λ)) V†; fn maps double -> Complex (or double).
template <class Fn>
Matrix spectral_function(const HermitianEigen& eig, Fn&& fn) {
  const Eigen::Index n = eig.values.size();
  Vector d(n);
  for (Eigen::Index k = 0; k < n; ++k) d(k) = Complex(fn(eig.values(k)));
  return eig.vectors * d.asDiagonal() * eig.vectors.adjoint();
}

template <class Fn>
Matrix spectral_function(const Matrix& hermitian, Fn&& fn) {
  return spectral_function(hermitian_eigen(hermitian), std::forward<Fn>(fn));
}

/// Spectral (2-norm) condition number; +inf for exactly singular input.
inline double condition_number(const Matrix& m) {
  if (m.size() == 0) return 1.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

/// Numerically stable 1 / (1 + e^{-x}).
inline double logistic(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace carent

#endif  // CARENT_LINALG_HPP
