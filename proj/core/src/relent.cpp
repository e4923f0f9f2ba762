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

#include "carent/relent.hpp"

#include <cmath>
#include <sstream>

#include "carent/errors.hpp"

namespace carent {

namespace {

void require_kms(const QuasifreeState& state) {
  if (!state.is_kms()) {
    throw DomainError("relative entropy formulas need a KMS-tagged quasifree state (h, beta)");
  }
}

double real_part_checked(Complex z, double tol, const char* what) {
  if (std::abs(z.imag()) > tol * std::max(1.0, std::abs(z.real()))) {
    std::ostringstream os;
    os << what << ": imaginary residue " << z.imag() << " exceeds " << tol;
    throw NumericalError(os.str());
  }
  return z.real();
}

}  // namespace

std::string_view to_string(EntropyMethod m) {
  switch (m) {
    case EntropyMethod::closed_form_single: return "closed_form_single";
    case EntropyMethod::pfaffian_trace: return "pfaffian_trace";
    case EntropyMethod::concatenation: return "concatenation";
    case EntropyMethod::exponential: return "exponential";
  }
  return "unknown";
}

EntropyResult::EntropyResult(double value, EntropyMethod method, EntropyDiagnostics diagnostics)
    : value_(value), method_(method), diagnostics_(diagnostics) {
  if (!(value >= -1e-9)) {
    std::ostringstream os;
    os << "relative entropy came out negative (" << value << ")";
    throw NumericalError(os.str());
  }
}

double sin_squared_one() {
  const double s = std::sin(1.0);
  return s * s;
}

AntisymmetricMatrix evolved_pairing_matrix(const QuasifreeState& state,
                                           std::span<const ExcitationVector> fs, double t) {
  require_kms(state);
  const auto m = static_cast<Eigen::Index>(fs.size());
  const BasePolarization& q = state.polarization();
  const Matrix u = state.flow()->h.flow(state.beta() * t);

  std::vector<Vector> seq;
  seq.reserve(2 * fs.size());
  for (const auto& f : fs) {
    q.space().require_vector(f.components());
    seq.push_back(f.components());
  }
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) seq.push_back(u * it->components());

  Matrix a = Matrix::Zero(2 * m, 2 * m);
  for (Eigen::Index j = 0; j < 2 * m; ++j) {
    for (Eigen::Index k = j + 1; k < 2 * m; ++k) {
      a(j, k) = two_point(q, seq[j], seq[k]);
      a(k, j) = -a(j, k);
    }
  }
  return AntisymmetricMatrix(a);
}

EntropyMatrices build_entropy_matrices(const QuasifreeState& state, std::span<const ExcitationVector> fs) {
  require_kms(state);
  const auto m = static_cast<Eigen::Index>(fs.size());
  const Matrix qk = state.polarization().matrix() * state.modular_generator();
  Matrix response(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      response(j, k) = fs[j].components().dot(qk * fs[m - 1 - k].components());
    }
  }
  return {evolved_pairing_matrix(state, fs, 0.0), std::move(response)};
}

std::vector<ExcitationVector> cancel_adjacent_duplicates(std::span<const ExcitationVector> fs) {
  std::vector<ExcitationVector> out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    if (!out.empty() && out.back().components().size() == f.components().size() &&
        (out.back().components() - f.components()).cwiseAbs().maxCoeff() <= 1e-12) {
      out.pop_back();
    } else {
      out.push_back(f);
    }
  }
  return out;
}

EntropyResult relent_single(const QuasifreeState& state, const ExcitationVector& f) {
  require_kms(state);
  state.polarization().space().require_vector(f.components());
  const Vector kf = state.modular_generator() * f.components();
  const Complex s = f.components().dot(state.polarization().matrix() * kf);
  return EntropyResult(real_part_checked(s, 1e-10, "relent_single"), EntropyMethod::closed_form_single);
}

EntropyResult relent_multi(const QuasifreeState& state, std::span<const ExcitationVector> input) {
  require_kms(state);
  const std::vector<ExcitationVector> fs = cancel_adjacent_duplicates(input);
  if (fs.empty()) return EntropyResult(0.0, EntropyMethod::pfaffian_trace);

  const EntropyMatrices mats = build_entropy_matrices(state, fs);
  const Matrix& a = mats.pairing.matrix();
  const Eigen::Index m = mats.response.rows();

  EntropyDiagnostics diag;
  diag.condition = condition_number(a);
  if (!(diag.condition <= kMaxCondition)) {
    std::ostringstream os;
    os << "pairing matrix is singular (condition estimate " << diag.condition
       << "); remove duplicate or linearly dependent excitations";
    throw SingularityError(os.str(), diag.condition);
  }
  diag.pfaffian_residual = std::abs(pfaffian(mats.pairing) - Complex(1.0, 0.0));

  // i dA/dt at t = 0
  Matrix generator = Matrix::Zero(2 * m, 2 * m);
  generator.topRightCorner(m, m) = mats.response;
  generator.bottomLeftCorner(m, m) = -mats.response.transpose();

  const Complex s = 0.5 * a.partialPivLu().solve(generator).trace();
  return EntropyResult(real_part_checked(s, 1e-9, "relent_multi"), EntropyMethod::pfaffian_trace, diag);
}

EntropyResult relent_between(const QuasifreeState& state, std::span<const ExcitationVector> fs,
                             std::span<const ExcitationVector> gs) {
  std::vector<ExcitationVector> combined(gs.rbegin(), gs.rend());
  combined.insert(combined.end(), fs.begin(), fs.end());
  const EntropyResult r = relent_multi(state, combined);
  return EntropyResult(r.value(), EntropyMethod::concatenation, r.diagnostics());
}

EntropyResult relent_exponential(const QuasifreeState& state, const ExcitationVector& f) {
  return EntropyResult(sin_squared_one() * relent_single(state, f).value(), EntropyMethod::exponential);
}

}  // namespace carent
