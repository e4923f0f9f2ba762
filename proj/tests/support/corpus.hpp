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


// Seeded random corpus shared by the unit and acceptance suites.

#ifndef CARENT_TESTS_CORPUS_HPP
#define CARENT_TESTS_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "carent/one_particle.hpp"
#include "carent/pfaffian.hpp"

namespace carent::testing {

class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Complex complex_normal() {
    std::normal_distribution<double> n;
    return {n(rng_), n(rng_)};
  }

  Vector vector(Eigen::Index size) {
    Vector v(size);
    for (Eigen::Index i = 0; i < size; ++i) v(i) = complex_normal();
    return v;
  }

  Matrix matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = complex_normal();
    return m;
  }

  Matrix hermitian(Eigen::Index n) {
    Matrix g = matrix(n, n);
    return (g + g.adjoint()) / 2.0;
  }

  Matrix antisymmetric(Eigen::Index n) {
    Matrix g = matrix(n, n);
    return g - g.transpose();
  }

  // h0 with every eigenvalue in [0.15, 2] in absolute value, so that the
  // self-dual h has no zero modes and Gibbs weights stay well above roundoff.
  Matrix gapped_h0(int n) {
    for (;;) {
      Matrix h0 = hermitian(n);
      Eigen::SelfAdjointEigenSolver<Matrix> es(h0);
      const RealVector ev = es.eigenvalues();
      const double factor = uniform(0.6, 2.0) / ev.cwiseAbs().maxCoeff();
      if (factor * ev.cwiseAbs().minCoeff() < 0.15) continue;
      return h0 * factor;
    }
  }

  SelfDualHamiltonian model(int n) { return embed_hamiltonian(build_canonical_space(n), gapped_h0(n)); }

  ExcitationVector admissible(const OneParticleSpace& space) {
    return symmetrize_normalize(space, vector(space.dim()));
  }

  std::vector<ExcitationVector> admissible_list(const OneParticleSpace& space, int count) {
    std::vector<ExcitationVector> out;
    for (int i = 0; i < count; ++i) out.push_back(admissible(space));
    return out;
  }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<Vector> components(const std::vector<ExcitationVector>& fs) {
  std::vector<Vector> out;
  for (const auto& f : fs) out.push_back(f.components());
  return out;
}

inline const double kBetas[] = {0.5, 1.0, 2.0};

}  // namespace carent::testing

#endif  // CARENT_TESTS_CORPUS_HPP
