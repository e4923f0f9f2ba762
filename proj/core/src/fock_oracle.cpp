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

#include "carent/fock_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <sstream>

#include "carent/errors.hpp"

namespace carent {

namespace {

std::vector<double> frequencies_from(const HermitianEigen& eig, const Vector& vacuum, const Matrix& a,
                                     const Matrix& b, double tol, bool& invariant) {
  const Eigen::Index dim = eig.values.size();
  if (vacuum.size() != dim || a.rows() != dim || b.rows() != dim) {
    throw DomainError("operator dimensions do not match the Hamiltonian");
  }
  // coordinates of Ω, A†Ω and BΩ in the eigenbasis
  const Vector omega = eig.vectors.adjoint() * vacuum;
  const Vector left = eig.vectors.adjoint() * (a.adjoint() * vacuum);
  const Vector right = eig.vectors.adjoint() * (b * vacuum);

  const double e0 = (omega.cwiseAbs2().transpose() * eig.values)(0);
  double leak = 0.0;
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (std::abs(eig.values(k) - e0) > tol) leak += std::norm(omega(k));
  }
  invariant = std::sqrt(leak) <= tol;

  // weights summed over (numerically) degenerate eigenvalues
  std::vector<double> out;
  Eigen::Index k = 0;
  while (k < dim) {
    Eigen::Index end = k + 1;
    while (end < dim && eig.values(end) - eig.values(k) <= tol) ++end;
    Complex w(0.0, 0.0);
    for (Eigen::Index j = k; j < end; ++j) w += std::conj(left(j)) * right(j);
    if (std::abs(w) > tol) out.push_back(eig.values(k) - e0);
    k = end;
  }
  return out;
}

HermitianEigen diagonal_eigen(const RealVector& energies) {
  // occupation basis sorted by energy
  std::vector<Eigen::Index> order(static_cast<std::size_t>(energies.size()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Eigen::Index>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return energies(x) < energies(y); });
  HermitianEigen eig{RealVector(energies.size()), Matrix::Zero(energies.size(), energies.size())};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto col = static_cast<Eigen::Index>(i);
    eig.values(col) = energies(order[i]);
    eig.vectors(order[i], col) = 1.0;
  }
  return eig;
}

}  // namespace

// ---------------------------------------------------------------------------
// FockRep

Matrix FockRep::hamiltonian() const { return energies_.cast<Complex>().asDiagonal(); }

Vector FockRep::vacuum() const {
  Vector v = Vector::Zero(dim());
  v(0) = 1.0;
  return v;
}

Matrix FockRep::propagator(double t) const {
  Vector d(dim());
  for (Eigen::Index s = 0; s < dim(); ++s) d(s) = std::exp(Complex(0.0, -t * energies_(s)));
  return d.asDiagonal();
}

FockRep build_fock_rep(const SelfDualHamiltonian& h, int max_modes) {
  if (h.has_zero_modes()) {
    throw ZeroModeError("Fock oracle requires absence of zero modes for h");
  }
  const auto n = static_cast<int>(h.positive_modes().size());
  if (n > max_modes) {
    std::ostringstream os;
    os << "Fock oracle limited to " << max_modes << " modes, model has " << n;
    throw ResourceLimitError(os.str());
  }
  if (n > 20) throw ResourceLimitError("Fock oracle cannot address more than 20 modes");

  FockRep rep(h.space());
  const Eigen::Index dim = Eigen::Index{1} << n;
  rep.mode_energies_ = h.positive_energies();
  rep.mode_vectors_.resize(h.space().dim(), n);
  for (int j = 0; j < n; ++j) rep.mode_vectors_.col(j) = h.mode_vector(static_cast<std::size_t>(j));

  rep.annihilators_.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const auto bit = std::uint64_t{1} << j;
    std::vector<Eigen::Triplet<Complex>> entries;
    entries.reserve(static_cast<std::size_t>(dim / 2));
    for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(dim); ++s) {
      if ((s & bit) == 0) continue;
      const int parity = std::popcount(s & (bit - 1)) % 2;
      entries.emplace_back(static_cast<Eigen::Index>(s ^ bit), static_cast<Eigen::Index>(s),
                           Complex(parity ? -1.0 : 1.0, 0.0));
    }
    SparseMatrix a(dim, dim);
    a.setFromTriplets(entries.begin(), entries.end());
    rep.annihilators_.push_back(std::move(a));
  }

  rep.energies_ = RealVector::Zero(dim);
  for (std::uint64_t s = 0; s < static_cast<std::uint64_t>(dim); ++s) {
    double e = 0.0;
    for (int j = 0; j < n; ++j)
      if (s & (std::uint64_t{1} << j)) e += rep.mode_energies_(j);
    rep.energies_(static_cast<Eigen::Index>(s)) = e;
  }
  return rep;
}

Matrix represent(const FockRep& rep, const Vector& f) {
  rep.space().require_vector(f);
  SparseMatrix out(rep.dim(), rep.dim());
  for (int j = 0; j < rep.modes(); ++j) {
    const Vector e = rep.mode_vectors().col(j);
    const Complex create = e.dot(f);
    const Complex annihilate = rep.space().conjugate(e).dot(f);
    const SparseMatrix& a = rep.annihilators()[static_cast<std::size_t>(j)];
    out += create * SparseMatrix(a.adjoint()) + annihilate * a;
  }
  return Matrix(out);
}

Matrix represent_product(const FockRep& rep, std::span<const ExcitationVector> fs) {
  Matrix f = Matrix::Identity(rep.dim(), rep.dim());
  for (const auto& x : fs) f = f * represent(rep, x.components());
  return f;
}

Matrix evolve(const FockRep& rep, const Matrix& x, double t) {
  const Matrix u = rep.propagator(t);
  return u * x * u.adjoint();
}

// ---------------------------------------------------------------------------
// Densities and entropies

DensityMatrix::DensityMatrix(Matrix rho, double tol) : rho_(std::move(rho)) {
  if (rho_.rows() == 0 || rho_.rows() != rho_.cols()) throw DomainError("density matrix must be square");
  const double herm = (rho_ - rho_.adjoint()).norm();
  if (herm > tol) throw ValidationError("density matrix is not Hermitian", herm);
  rho_ = 0.5 * (rho_ + rho_.adjoint());
  const double tr = rho_.trace().real();
  if (std::abs(tr - 1.0) > tol) throw ValidationError("density matrix trace differs from 1", std::abs(tr - 1.0));
  const double lo = hermitian_eigen(rho_).values.minCoeff();
  if (lo < -tol) throw ValidationError("density matrix has negative eigenvalues", -lo);
}

DensityMatrix gibbs_density(const FockRep& rep, double beta) {
  if (!std::isfinite(beta) || beta <= 0.0) throw DomainError("beta must be finite and positive");
  const double e0 = rep.energies().minCoeff();
  RealVector w = (-beta * (rep.energies().array() - e0)).exp().matrix();
  w /= w.sum();
  return DensityMatrix(w.cast<Complex>().asDiagonal());
}

DensityMatrix conjugated_density(const Matrix& unitary, const DensityMatrix& rho) {
  if (unitary.rows() != rho.dim() || unitary.cols() != rho.dim()) {
    throw DomainError("unitary dimension does not match the density matrix");
  }
  return DensityMatrix(unitary * rho.matrix() * unitary.adjoint());
}

DensityMatrix excited_density(const FockRep& rep, const DensityMatrix& rho,
                              std::span<const ExcitationVector> fs) {
  return conjugated_density(represent_product(rep, fs), rho);
}

Complex expectation(const DensityMatrix& rho, const Matrix& x) {
  if (x.rows() != rho.dim() || x.cols() != rho.dim()) throw DomainError("operator dimension mismatch");
  return (rho.matrix() * x).trace();
}

double umegaki(const DensityMatrix& sigma, const DensityMatrix& tau) {
  if (sigma.dim() != tau.dim()) throw DomainError("density matrices differ in dimension");
  const HermitianEigen t = hermitian_eigen(tau.matrix());
  if (!(t.values.minCoeff() > 1e-14)) {
    std::ostringstream os;
    os << "support condition violated: reference density has eigenvalue " << t.values.minCoeff();
    throw SupportError(os.str());
  }
  const HermitianEigen s = hermitian_eigen(sigma.matrix());
  double entropy_part = 0.0;
  for (Eigen::Index k = 0; k < s.values.size(); ++k) {
    const double p = s.values(k);
    if (p > 0.0) entropy_part += p * std::log(p);
  }
  // Tr(σ log τ) evaluated in τ's eigenbasis
  const Matrix sigma_in_tau = t.vectors.adjoint() * sigma.matrix() * t.vectors;
  Complex cross(0.0, 0.0);
  for (Eigen::Index k = 0; k < t.values.size(); ++k) cross += sigma_in_tau(k, k) * std::log(t.values(k));
  if (std::abs(cross.imag()) > 1e-10) throw NumericalError("umegaki: complex residue in Tr(σ log τ)");
  return entropy_part - cross.real();
}

double commutator_entropy(const FockRep& rep, const DensityMatrix& rho,
                          std::span<const ExcitationVector> fs, double beta) {
  const Matrix f = represent_product(rep, fs);
  const Matrix fd = f.adjoint();
  const auto h = rep.energies().cast<Complex>().asDiagonal();
  const Matrix comm = h * fd - fd * h;
  const Complex z = beta * (rho.matrix() * f * comm).trace();
  if (std::abs(z.imag()) > 1e-10 * std::max(1.0, std::abs(z.real()))) {
    throw NumericalError("commutator_entropy: complex residue");
  }
  return z.real();
}

double verify_kms(const FockRep& rep, const DensityMatrix& rho, double beta, const Matrix& a,
                  const Matrix& b, double t) {
  const Eigen::Index dim = rep.dim();
  if (rho.dim() != dim || a.rows() != dim || a.cols() != dim || b.rows() != dim || b.cols() != dim) {
    throw DomainError("verify_kms: shape mismatch");
  }
  const RealVector& e = rep.energies();
  // α_z(B)_{kl} = e^{-iz(E_k - E_l)} B_{kl}
  auto alpha = [&](Complex z) {
    Matrix out(dim, dim);
    for (Eigen::Index l = 0; l < dim; ++l)
      for (Eigen::Index k = 0; k < dim; ++k) out(k, l) = std::exp(Complex(0.0, -1.0) * z * (e(k) - e(l))) * b(k, l);
    return out;
  };
  const Complex lhs = (rho.matrix() * a * alpha(Complex(t, 0.0))).trace();
  const Complex rhs = (rho.matrix() * alpha(Complex(t, beta)) * a).trace();
  return std::abs(lhs - rhs);
}

std::vector<double> contributing_frequencies(const Matrix& hamiltonian, const Vector& vacuum,
                                             const Matrix& a, const Matrix& b, double tol) {
  bool invariant = false;
  return frequencies_from(hermitian_eigen(hamiltonian), vacuum, a, b, tol, invariant);
}

bool verify_ground_state(const Matrix& hamiltonian, const Vector& vacuum, const Matrix& a,
                         const Matrix& b, double tol) {
  bool invariant = false;
  const auto freqs = frequencies_from(hermitian_eigen(hamiltonian), vacuum, a, b, tol, invariant);
  return invariant && std::all_of(freqs.begin(), freqs.end(), [tol](double v) { return v >= -tol; });
}

bool verify_ground_state(const FockRep& rep, const Matrix& a, const Matrix& b, double tol) {
  bool invariant = false;
  const auto freqs = frequencies_from(diagonal_eigen(rep.energies()), rep.vacuum(), a, b, tol, invariant);
  return invariant && std::all_of(freqs.begin(), freqs.end(), [tol](double v) { return v >= -tol; });
}

Matrix modular_evolve(const DensityMatrix& rho, const Matrix& x, double t) {
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  if (!(eig.values.minCoeff() > 0.0)) throw SupportError("modular flow needs a faithful density");
  const Matrix u = spectral_function(eig, [t](double p) { return std::exp(Complex(0.0, t * std::log(p))); });
  return u * x * u.adjoint();
}

}  // namespace carent
