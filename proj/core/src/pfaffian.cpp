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

#include "carent/pfaffian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "carent/errors.hpp"

namespace carent {

AntisymmetricMatrix::AntisymmetricMatrix(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) throw DomainError("antisymmetric matrix must be square");
  if (a.rows() % 2 != 0) throw DomainError("Pfaffian requires even order");
  const double v = relative_violation(a + a.transpose(), a);
  if (v > tol) {
    std::ostringstream os;
    os << "matrix is not antisymmetric (violation " << v << ")";
    throw ValidationError(os.str(), v);
  }
  a_ = 0.5 * (a - a.transpose());
}

Complex pfaffian(const AntisymmetricMatrix& input) {
  Matrix a = input.matrix();
  const Eigen::Index n = a.rows();
  Complex pf(1.0, 0.0);

  for (Eigen::Index k = 0; k + 1 < n; k += 2) {
    // pivot: largest entry in column k below the diagonal
    Eigen::Index kp = k + 1;
    double best = std::abs(a(k + 1, k));
    for (Eigen::Index i = k + 2; i < n; ++i) {
      if (std::abs(a(i, k)) > best) {
        best = std::abs(a(i, k));
        kp = i;
      }
    }
    if (kp != k + 1) {
      a.row(k + 1).swap(a.row(kp));
      a.col(k + 1).swap(a.col(kp));
      pf = -pf;
    }
    if (a(k + 1, k) == Complex(0.0, 0.0)) return Complex(0.0, 0.0);

    pf *= a(k, k + 1);
    if (k + 2 < n) {
      const Eigen::Index rest = n - k - 2;
      const Vector tau = a.row(k).segment(k + 2, rest).transpose() / a(k, k + 1);
      const Vector col = a.col(k + 1).segment(k + 2, rest);
      a.block(k + 2, k + 2, rest, rest) += tau * col.transpose() - col * tau.transpose();
    }
  }
  return pf;
}

Complex signed_pairing_sum(int m, const std::function<Complex(int, int)>& entry) {
  if (m < 0) throw DomainError("negative pair count");
  if (m > kMaxReferencePairs) {
    std::ostringstream os;
    os << "permutation-sum reference limited to " << 2 * kMaxReferencePairs << " entries, got " << 2 * m;
    throw ResourceLimitError(os.str());
  }
  if (m == 0) return Complex(1.0, 0.0);

  const int n = 2 * m;
  Complex total(0.0, 0.0);
  std::vector<int> p(n);
  std::vector<int> right;
  right.reserve(m);

  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    int li = 0;
    right.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        p[li++] = i;
      } else {
        right.push_back(i);
      }
    }
    do {
      bool ok = true;
      for (int j = 0; j < m && ok; ++j) ok = p[j] < right[j];
      if (!ok) continue;
      for (int j = 0; j < m; ++j) p[m + j] = right[j];

      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];

      Complex term(inversions % 2 == 0 ? 1.0 : -1.0, 0.0);
      for (int j = 0; j < m; ++j) term *= entry(p[j], p[j + m]);
      total += term;
    } while (std::next_permutation(right.begin(), right.end()));
  }
  const bool flip = ((m * (m - 1)) / 2) % 2 != 0;
  return flip ? -total : total;
}

Complex pfaffian_reference(const AntisymmetricMatrix& a) {
  const Matrix& m = a.matrix();
  return signed_pairing_sum(static_cast<int>(a.order() / 2), [&m](int i, int j) { return m(i, j); });
}

Complex pfaffian_derivative(const AntisymmetricMatrix& a, const AntisymmetricMatrix& adot) {
  if (a.order() != adot.order()) throw DomainError("pfaffian_derivative: orders differ");
  if (a.order() == 0) return Complex(0.0, 0.0);
  const double cond = condition_number(a.matrix());
  if (!(cond <= kMaxCondition)) {
    std::ostringstream os;
    os << "matrix is singular or ill-conditioned (condition estimate " << cond << ")";
    throw SingularityError(os.str(), cond);
  }
  const Matrix inv = a.matrix().partialPivLu().inverse();
  return 0.5 * pfaffian(a) * (inv * adot.matrix()).trace();
}

}  // namespace carent
