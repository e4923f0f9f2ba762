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

#ifndef CARENT_FOCK_ORACLE_HPP
#define CARENT_FOCK_ORACLE_HPP

#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include "carent/linalg.hpp"
#include "carent/one_particle.hpp"

namespace carent {

using SparseMatrix = Eigen::SparseMatrix<Complex>;

inline constexpr int kDefaultMaxModes = 10;

/// Irreducible Fock representation of the self-dual CAR algebra on C^{2^n},
/// built from the positive-energy eigenmodes e_1..e_n of h (ascending energy).
///
/// Mode j is bit j of the occupation-basis index; a_j carries the usual
/// Jordan-Wigner sign string over modes 0..j-1. The representation map is
/// B(e_j) -> a_j†, B(Γe_j) -> a_j, extended linearly, so the vacuum
/// reproduces the ground polarization E((0, ∞)). H = Σ ε_j a_j† a_j is
/// diagonal in the occupation basis and annihilates the vacuum (index 0).
class FockRep {
 public:
  int modes() const { return static_cast<int>(annihilators_.size()); }
  Eigen::Index dim() const { return energies_.size(); }

  const OneParticleSpace& space() const { return space_; }
  const std::vector<SparseMatrix>& annihilators() const { return annihilators_; }
  /// ε_j > 0, ascending.
  const RealVector& mode_energies() const { return mode_energies_; }
  /// Columns e_j (2n × n).
  const Matrix& mode_vectors() const { return mode_vectors_; }
  /// Diagonal of H in the occupation basis.
  const RealVector& energies() const { return energies_; }
  Matrix hamiltonian() const;
  Vector vacuum() const;

  /// U_t = e^{-itH}
  Matrix propagator(double t) const;

 private:
  friend FockRep build_fock_rep(const SelfDualHamiltonian&, int);
  explicit FockRep(OneParticleSpace space) : space_(std::move(space)) {}

  OneParticleSpace space_;
  std::vector<SparseMatrix> annihilators_;
  RealVector mode_energies_;
  Matrix mode_vectors_;
  RealVector energies_;
};

/// Throws ZeroModeError if h has zero modes and ResourceLimitError above `max_modes`.
FockRep build_fock_rep(const SelfDualHamiltonian& h, int max_modes = kDefaultMaxModes);

/// π(B(f)), complex-linear in f.
Matrix represent(const FockRep& rep, const Vector& f);

/// π(B(f_1)⋯B(f_n)); identity for an empty list.
Matrix represent_product(const FockRep& rep, std::span<const ExcitationVector> fs);

/// U_t X U_t^*
Matrix evolve(const FockRep& rep, const Matrix& x, double t);

/// Hermitian, positive semidefinite (eigenvalues >= -1e-12), unit trace (±1e-12).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix rho, double tol = 1e-12);
  const Matrix& matrix() const { return rho_; }
  Eigen::Index dim() const { return rho_.rows(); }

 private:
  Matrix rho_;
};

/// e^{-βH} / Tr e^{-βH}.
DensityMatrix gibbs_density(const FockRep& rep, double beta);

/// U ρ U^* for a unitary U.
DensityMatrix conjugated_density(const Matrix& unitary, const DensityMatrix& rho);

/// F ρ F^* with F = π(B(f_1)⋯B(f_n)).
DensityMatrix excited_density(const FockRep& rep, const DensityMatrix& rho,
                              std::span<const ExcitationVector> fs);

/// Tr(ρ X)
Complex expectation(const DensityMatrix& rho, const Matrix& x);

/// Tr(σ(log σ - log τ)), with 0·log 0 = 0. Throws SupportError unless τ > 1e-14.
double umegaki(const DensityMatrix& sigma, const DensityMatrix& tau);

/// β·Tr(ρ F [H, F^*]) with F = π(B(f_1)⋯B(f_n)). Equals umegaki(ρ, FρF^*) when ρ
/// is the Gibbs density at the same β.
double commutator_entropy(const FockRep& rep, const DensityMatrix& rho,
                          std::span<const ExcitationVector> fs, double beta = 1.0);

/// |Tr(ρ A α_t(B)) - Tr(ρ α_{t+iβ}(B) A)| with α_z(B) = e^{-izH} B e^{izH}.
double verify_kms(const FockRep& rep, const DensityMatrix& rho, double beta, const Matrix& a,
                  const Matrix& b, double t);

/// Frequencies ν carried by t -> (Ω, A α_t(B) Ω) with nonzero weight, where
/// α_t(B) = e^{-itH} B e^{itH} and ν is measured from the energy of Ω.
std::vector<double> contributing_frequencies(const Matrix& hamiltonian, const Vector& vacuum,
                                             const Matrix& a, const Matrix& b, double tol = 1e-10);

/// Spectral form of the ground-state condition: Ω is H-invariant and every
/// contributing frequency is nonnegative.
bool verify_ground_state(const Matrix& hamiltonian, const Vector& vacuum, const Matrix& a,
                         const Matrix& b, double tol = 1e-10);
bool verify_ground_state(const FockRep& rep, const Matrix& a, const Matrix& b, double tol = 1e-10);

/// ρ^{it} X ρ^{-it}
Matrix modular_evolve(const DensityMatrix& rho, const Matrix& x, double t);

}  // namespace carent

#endif  // CARENT_FOCK_ORACLE_HPP
