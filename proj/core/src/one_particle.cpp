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

#include "carent/one_particle.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "carent/errors.hpp"

namespace carent {

namespace {

std::string describe(const char* what, double value) {
  std::ostringstream os;
  os << what << " (violation " << value << ")";
  return os.str();
}

// Largest-magnitude component made real positive; the first index wins ties.
void fix_phase(Eigen::Ref<Vector> v) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) best = std::max(best, std::abs(v(i)));
  if (best == 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= best - 1e-12) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = Complex(std::abs(v(i)), 0.0);
      return;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// OneParticleSpace

OneParticleSpace::OneParticleSpace(Matrix conj_matrix, double tol) : conj_(std::move(conj_matrix)) {
  if (conj_.rows() == 0 || conj_.rows() != conj_.cols() || conj_.rows() % 2 != 0) {
    throw DomainError("conjugation matrix must be square with even positive dimension");
  }
  const Matrix id = Matrix::Identity(conj_.rows(), conj_.cols());
  const double unitarity = relative_violation(conj_ * conj_.adjoint() - id, id);
  if (unitarity > tol) throw ValidationError(describe("conjugation matrix is not unitary", unitarity), unitarity);
  const double involution = relative_violation(conj_ * conj_.conjugate() - id, id);
  if (involution > tol) throw ValidationError(describe("Γ∘Γ is not the identity", involution), involution);
}

Vector OneParticleSpace::conjugate(const Vector& v) const {
  require_vector(v);
  return conj_ * v.conjugate();
}

Matrix OneParticleSpace::conjugate(const Matrix& op) const {
  if (op.rows() != dim() || op.cols() != dim()) throw DomainError("operator dimension mismatch");
  return conj_ * op.conjugate() * conj_.conjugate();
}

void OneParticleSpace::require_vector(const Vector& v) const {
  if (v.size() != dim()) {
    std::ostringstream os;
    os << "vector dimension " << v.size() << " does not match one-particle dimension " << dim();
    throw DomainError(os.str());
  }
}

OneParticleSpace build_canonical_space(int n) {
  if (n < 1) throw DomainError("invalid dimension: the canonical space needs n >= 1 modes");
  Matrix c = Matrix::Zero(2 * n, 2 * n);
  c.topRightCorner(n, n).setIdentity();
  c.bottomLeftCorner(n, n).setIdentity();
  return OneParticleSpace(std::move(c));
}

// ---------------------------------------------------------------------------
// SelfDualHamiltonian

SelfDualHamiltonian::SelfDualHamiltonian(OneParticleSpace space, Matrix h, HermitianEigen eig,
                                         double zero_tol)
    : space_(std::move(space)), h_(std::move(h)), eig_(std::move(eig)), zero_tol_(zero_tol) {
  for (Eigen::Index k = 0; k < eig_.values.size(); ++k) {
    if (eig_.values(k) > zero_tol_) positive_.push_back(k);
  }
}

bool SelfDualHamiltonian::has_zero_modes() const {
  for (Eigen::Index k = 0; k < eig_.values.size(); ++k) {
    if (std::abs(eig_.values(k)) <= zero_tol_) return true;
  }
  return false;
}

RealVector SelfDualHamiltonian::positive_energies() const {
  RealVector out(static_cast<Eigen::Index>(positive_.size()));
  for (std::size_t k = 0; k < positive_.size(); ++k) out(static_cast<Eigen::Index>(k)) = eig_.values(positive_[k]);
  return out;
}

Vector SelfDualHamiltonian::mode_vector(std::size_t k) const {
  if (k >= positive_.size()) {
    std::ostringstream os;
    os << "mode index " << k << " out of range (" << positive_.size() << " positive modes)";
    throw DomainError(os.str());
  }
  return eig_.vectors.col(positive_[k]);
}

Matrix SelfDualHamiltonian::flow(double t) const {
  return spectral_function(eig_, [t](double e) { return std::exp(Complex(0.0, -t * e)); });
}

SelfDualHamiltonian validate_hamiltonian(const OneParticleSpace& space, const Matrix& h, double tol) {
  if (h.rows() != space.dim() || h.cols() != space.dim()) {
    throw DomainError("hamiltonian dimension does not match the one-particle space");
  }
  const double herm = relative_violation(h - h.adjoint(), h);
  if (herm > tol) throw ValidationError(describe("h is not Hermitian", herm), herm);
  const double anti = relative_violation(space.conjugate(h) + h, h);
  if (anti > tol) throw ValidationError(describe("Γ h Γ != -h", anti), anti);

  HermitianEigen eig = hermitian_eigen(h);
  for (Eigen::Index k = 0; k < eig.vectors.cols(); ++k) fix_phase(eig.vectors.col(k));
  const double radius = eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  const double zero_tol = tol * std::max(1.0, radius);
  return SelfDualHamiltonian(space, 0.5 * (h + h.adjoint()), std::move(eig), zero_tol);
}

SelfDualHamiltonian embed_hamiltonian(const OneParticleSpace& space, const Matrix& h0, double tol) {
  const Eigen::Index n = space.modes();
  if (h0.rows() != n || h0.cols() != n) {
    std::ostringstream os;
    os << "h0 is " << h0.rows() << "x" << h0.cols() << " but the space has " << n << " modes";
    throw DomainError(os.str());
  }
  const double herm = relative_violation(h0 - h0.adjoint(), h0);
  if (herm > tol) throw ValidationError(describe("h0 is not Hermitian", herm), herm);
  Matrix h = Matrix::Zero(2 * n, 2 * n);
  h.topLeftCorner(n, n) = h0;
  h.bottomRightCorner(n, n) = -h0.conjugate();
  return validate_hamiltonian(space, h, tol);
}

// ---------------------------------------------------------------------------
// BasePolarization

BasePolarization::BasePolarization(const OneParticleSpace& space, Matrix q, double tol)
    : BasePolarization(space, std::move(q), PolarizationKind::explicit_matrix, std::nullopt, tol) {}

BasePolarization::BasePolarization(const OneParticleSpace& space, Matrix q, PolarizationKind kind,
                                   std::optional<double> beta, double tol)
    : space_(space), q_(std::move(q)), kind_(kind), beta_(beta) {
  if (q_.rows() != space_.dim() || q_.cols() != space_.dim()) {
    throw DomainError("polarization dimension does not match the one-particle space");
  }
  const double herm = relative_violation(q_ - q_.adjoint(), q_);
  if (herm > tol) throw ValidationError(describe("Q is not Hermitian", herm), herm);
  const RealVector ev = hermitian_eigen(q_).values;
  if (ev.size() > 0 && (ev.minCoeff() < -tol || ev.maxCoeff() > 1.0 + tol)) {
    const double v = std::max(-ev.minCoeff(), ev.maxCoeff() - 1.0);
    throw ValidationError(describe("Q has eigenvalues outside [0, 1]", v), v);
  }
  const Matrix id = Matrix::Identity(q_.rows(), q_.cols());
  const double pol = relative_violation(q_ + space_.conjugate(q_) - id, id);
  if (pol > tol) throw ValidationError(describe("Q + ΓQΓ != 1", pol), pol);
}

BasePolarization q_beta(const SelfDualHamiltonian& h, double beta) {
  if (!std::isfinite(beta) || beta <= 0.0) throw DomainError("beta must be finite and positive");
  Matrix q = spectral_function(h.eigen(), [beta](double e) { return logistic(beta * e); });
  return BasePolarization(h.space(), std::move(q), PolarizationKind::kms, beta, kDefaultTolerance);
}

BasePolarization ground_polarization(const SelfDualHamiltonian& h) {
  if (h.has_zero_modes()) {
    throw ZeroModeError("ground polarization requires absence of zero modes for h");
  }
  const double tol = h.zero_tolerance();
  Matrix p = spectral_function(h.eigen(), [tol](double e) { return e > tol ? 1.0 : 0.0; });
  return BasePolarization(h.space(), std::move(p), PolarizationKind::ground, std::nullopt,
                          kDefaultTolerance);
}

// ---------------------------------------------------------------------------
// ExcitationVector

ExcitationVector::ExcitationVector(const OneParticleSpace& space, Vector components,
                                   std::string label, double tol)
    : f_(std::move(components)), label_(std::move(label)) {
  space.require_vector(f_);
  const double sym = (space.conjugate(f_) - f_).norm();
  if (sym > tol) throw ValidationError(describe("excitation vector is not Γ-invariant", sym), sym);
  const double norm2 = f_.squaredNorm();
  if (std::abs(norm2 - 2.0) > tol) {
    throw ValidationError(describe("excitation vector must satisfy ⟨f, f⟩ = 2", std::abs(norm2 - 2.0)),
                          std::abs(norm2 - 2.0));
  }
}

ExcitationVector spectral_excitation(const SelfDualHamiltonian& h, std::size_t mode) {
  if (mode >= h.positive_modes().size()) {
    std::ostringstream os;
    os << "mode index " << mode << " out of range; h has " << h.positive_modes().size()
       << " positive modes (zero modes cannot be selected)";
    throw DomainError(os.str());
  }
  return paired_excitation(h.space(), h.mode_vector(mode), "mode" + std::to_string(mode));
}

ExcitationVector paired_excitation(const OneParticleSpace& space, const Vector& e, std::string label) {
  return ExcitationVector(space, e + space.conjugate(e), std::move(label));
}

ExcitationVector symmetrize_normalize(const OneParticleSpace& space, const Vector& v, std::string label) {
  space.require_vector(v);
  const Vector s = v + space.conjugate(v);
  const double norm = s.norm();
  if (norm <= 1e-12 * std::max(1.0, v.norm())) {
    throw ValidationError("degenerate input: v + Γv vanishes", norm);
  }
  return ExcitationVector(space, (std::sqrt(2.0) / norm) * s, std::move(label));
}

Complex two_point(const BasePolarization& q, const Vector& f, const Vector& g) {
  q.space().require_vector(f);
  q.space().require_vector(g);
  return q.space().conjugate(f).dot(q.matrix() * g);
}

}  // namespace carent
