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

#ifndef CARENT_RELENT_HPP
#define CARENT_RELENT_HPP

#include <span>
#include <string_view>
#include <vector>

#include "carent/one_particle.hpp"
#include "carent/pfaffian.hpp"
#include "carent/quasifree.hpp"

namespace carent {

// Argument order follows Araki: S(ω_Ψ ‖ ω) = -(Ω, log Δ_{Ψ,Ω} Ω), which in a
// density-matrix representation is Tr(ρ(log ρ - log ρ_Ψ)). The excited state
// comes first, the reference state second, and the reference density is the
// one that weighs the logarithms. Many texts use the swapped convention.

enum class EntropyMethod { closed_form_single, pfaffian_trace, concatenation, exponential };

std::string_view to_string(EntropyMethod m);

struct EntropyDiagnostics {
  /// 2-norm condition number of the pairing matrix (1 when none was built).
  double condition = 1.0;
  /// |Pf(A) - 1|; zero in exact arithmetic.
  double pfaffian_residual = 0.0;
};

/// A relative entropy in nats. Construction rejects values below -1e-9.
class EntropyResult {
 public:
  EntropyResult(double value, EntropyMethod method, EntropyDiagnostics diagnostics = {});

  double value() const { return value_; }
  EntropyMethod method() const { return method_; }
  const EntropyDiagnostics& diagnostics() const { return diagnostics_; }

 private:
  double value_;
  EntropyMethod method_;
  EntropyDiagnostics diagnostics_;
};

/// sin²(1), the ratio between exponential and single excitation entropies.
double sin_squared_one();

/// Pairing matrix A (order 2m) and response matrix a (m × m) of an excitation list.
struct EntropyMatrices {
  AntisymmetricMatrix pairing;
  Matrix response;
};

/// A has upper entries W²(g_j, g_k) for the sequence g = (f_1..f_m, f_m..f_1);
/// a[j,k] = ⟨f_j, Q_(β)(βh) f_{m-1-k}⟩ (zero-based, columns reversed).
EntropyMatrices build_entropy_matrices(const QuasifreeState& state, std::span<const ExcitationVector> fs);

/// A(t): the pairing matrix of (f_1..f_m, u f_m..u f_1) with u = e^{-it(βh)}.
/// A(0) is build_entropy_matrices(...).pairing and i d/dt Pf(A(t)) at 0 is the entropy.
AntisymmetricMatrix evolved_pairing_matrix(const QuasifreeState& state,
                                           std::span<const ExcitationVector> fs, double t);

/// Removes adjacent pairs of identical vectors (within 1e-12), repeatedly, since B(f)B(f) = 1.
std::vector<ExcitationVector> cancel_adjacent_duplicates(std::span<const ExcitationVector> fs);

/// S(ω_f ‖ ω) = ⟨f, Q_(β)(βh) f⟩.
EntropyResult relent_single(const QuasifreeState& state, const ExcitationVector& f);

/// S(ω_{f_1⋯f_m} ‖ ω) = ½ Tr(A⁻¹ [[0, a], [-aᵀ, 0]]) = i d/dt Pf(A(t)) at t = 0.
EntropyResult relent_multi(const QuasifreeState& state, std::span<const ExcitationVector> fs);

/// S(ω_{f_1⋯f_n} ‖ ω_{g_1⋯g_m}) = S(ω_{g_m⋯g_1 f_1⋯f_n} ‖ ω).
EntropyResult relent_between(const QuasifreeState& state, std::span<const ExcitationVector> fs,
                             std::span<const ExcitationVector> gs);

/// Entropy of the state implemented by e^{iB(f)} = cos(1) + i sin(1) B(f): sin²(1)·S(ω_f ‖ ω).
EntropyResult relent_exponential(const QuasifreeState& state, const ExcitationVector& f);

}  // namespace carent

#endif  // CARENT_RELENT_HPP
