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

#ifndef CARENT_ONE_PARTICLE_HPP
#define CARENT_ONE_PARTICLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "carent/linalg.hpp"

namespace carent {

/// One-particle space K = C^{2n} with the antiunitary involution Γv = C·conj(v).
///
/// C must be unitary with C·conj(C) = 1 so that Γ is antiunitary and Γ² = 1.
class OneParticleSpace {
 public:
  explicit OneParticleSpace(Matrix conj_matrix, double tol = kDefaultTolerance);

  Eigen::Index dim() const { return conj_.rows(); }
  Eigen::Index modes() const { return conj_.rows() / 2; }
  const Matrix& conj_matrix() const { return conj_; }

  /// Γv
  Vector conjugate(const Vector& v) const;
  /// Γ A Γ, which is again a complex-linear operator.
  Matrix conjugate(const Matrix& op) const;

  /// Throws DomainError if `v` does not live in K.
  void require_vector(const Vector& v) const;

 private:
  Matrix conj_;
};

/// K = H ⊕ conj(H) with Γ(x ⊕ y) = (ȳ ⊕ x̄).
OneParticleSpace build_canonical_space(int n);

/// Hermitian generator h of u_t = e^{-ith} with Γ h Γ = -h, plus its cached eigendecomposition.
class SelfDualHamiltonian {
 public:
  const OneParticleSpace& space() const { return space_; }
  const Matrix& matrix() const { return h_; }
  /// Ascending.
  const RealVector& eigenvalues() const { return eig_.values; }
  /// Orthonormal, phase-fixed columns matching eigenvalues().
  const Matrix& eigenvectors() const { return eig_.vectors; }
  const HermitianEigen& eigen() const { return eig_; }

  /// Eigenvalues with |ε| below this are treated as zero modes.
  double zero_tolerance() const { return zero_tol_; }
  bool has_zero_modes() const;

  /// Column indices of the strictly positive eigenvalues, ascending in energy.
  const std::vector<Eigen::Index>& positive_modes() const { return positive_; }
  RealVector positive_energies() const;
  /// Unit eigenvector of the k-th positive eigenvalue.
  Vector mode_vector(std::size_t k) const;

  /// u_t = e^{-ith}
  Matrix flow(double t) const;

 private:
  friend SelfDualHamiltonian validate_hamiltonian(const OneParticleSpace&, const Matrix&, double);
  SelfDualHamiltonian(OneParticleSpace space, Matrix h, HermitianEigen eig, double zero_tol);

  OneParticleSpace space_;
  Matrix h_;
  HermitianEigen eig_;
  double zero_tol_;
  std::vector<Eigen::Index> positive_;
};

/// Accepts h iff h = h† and Γ h Γ = -h within relative tolerance `tol`.
SelfDualHamiltonian validate_hamiltonian(const OneParticleSpace& space, const Matrix& h,
                                         double tol = kDefaultTolerance);

/// h = h0 ⊕ (-conj(h0)) on the canonical space; self-dual by construction.
SelfDualHamiltonian embed_hamiltonian(const OneParticleSpace& space, const Matrix& h0,
                                      double tol = kDefaultTolerance);

enum class PolarizationKind { explicit_matrix, kms, ground };

/// Base polarization Q: 0 <= Q = Q† <= 1 and Q + ΓQΓ = 1.
class BasePolarization {
 public:
  BasePolarization(const OneParticleSpace& space, Matrix q, double tol = kDefaultTolerance);

  const OneParticleSpace& space() const { return space_; }
  const Matrix& matrix() const { return q_; }
  PolarizationKind kind() const { return kind_; }
  /// Set for KMS polarizations only.
  std::optional<double> beta() const { return beta_; }

 private:
  friend BasePolarization q_beta(const SelfDualHamiltonian&, double);
  friend BasePolarization ground_polarization(const SelfDualHamiltonian&);
  BasePolarization(const OneParticleSpace& space, Matrix q, PolarizationKind kind,
                   std::optional<double> beta, double tol);

  OneParticleSpace space_;
  Matrix q_;
  PolarizationKind kind_ = PolarizationKind::explicit_matrix;
  std::optional<double> beta_;
};

/// Q_(β) = (1 + e^{-βh})^{-1} by the spectral calculus.
BasePolarization q_beta(const SelfDualHamiltonian& h, double beta);

/// P = E((0, ∞)); requires absence of zero modes.
BasePolarization ground_polarization(const SelfDualHamiltonian& h);

/// f with Γf = f and ⟨f, f⟩ = 2, so that B(f) is a self-adjoint unitary.
class ExcitationVector {
 public:
  ExcitationVector(const OneParticleSpace& space, Vector components, std::string label = {},
                   double tol = 1e-10);

  const Vector& components() const { return f_; }
  const std::string& label() const { return label_; }

 private:
  Vector f_;
  std::string label_;
};

/// f = e + Γe for the unit eigenvector e of the `mode`-th positive eigenvalue.
ExcitationVector spectral_excitation(const SelfDualHamiltonian& h, std::size_t mode);

/// f = e + Γe for a unit vector e with ⟨Γe, e⟩ = 0 (e.g. any positive-energy vector).
ExcitationVector paired_excitation(const OneParticleSpace& space, const Vector& e,
                                   std::string label = {});

/// f = c (v + Γv) with c > 0 fixing ⟨f, f⟩ = 2.
ExcitationVector symmetrize_normalize(const OneParticleSpace& space, const Vector& v,
                                      std::string label = {});

/// W²(f, g) = ⟨Γf, Q g⟩.
Complex two_point(const BasePolarization& q, const Vector& f, const Vector& g);

}  // namespace carent

#endif  // CARENT_ONE_PARTICLE_HPP
