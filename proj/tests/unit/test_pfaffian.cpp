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


#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "carent/errors.hpp"
#include "carent/pfaffian.hpp"
#include "corpus.hpp"

namespace carent {
namespace {

using testing::Corpus;

// Expansion along the first row, written independently of the library.
Complex expand_first_row(const Matrix& a, std::vector<int> idx) {
  if (idx.empty()) return 1.0;
  const int first = idx.front();
  Complex total = 0.0;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    total += sign * a(first, idx[j]) * expand_first_row(a, rest);
  }
  return total;
}

Complex expand_first_row(const Matrix& a) {
  std::vector<int> idx(static_cast<std::size_t>(a.rows()));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return expand_first_row(a, idx);
}

Matrix fixture4() {
  Matrix a = Matrix::Zero(4, 4);
  a(0, 1) = 1.0;
  a(0, 2) = 2.0;
  a(0, 3) = 3.0;
  a(1, 2) = 4.0;
  a(1, 3) = 5.0;
  a(2, 3) = 6.0;
  return a - a.transpose().eval();
}

TEST(Antisymmetric, RejectsOddOrder) {
  EXPECT_THROW(AntisymmetricMatrix(Matrix::Zero(3, 3)), DomainError);
}

TEST(Antisymmetric, RejectsSymmetricPart) {
  Matrix a = fixture4();
  a(0, 1) += 0.5;
  try {
    AntisymmetricMatrix{a};
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_GT(e.violation(), 1e-3);
  }
}

TEST(Antisymmetric, RejectsNonSquare) {
  EXPECT_THROW(AntisymmetricMatrix(Matrix::Zero(2, 4)), DomainError);
}

TEST(Pfaffian, EmptyMatrixIsOne) {
  EXPECT_EQ(pfaffian(AntisymmetricMatrix(Matrix(0, 0))), Complex(1.0));
}

TEST(Pfaffian, FourByFourFixture) {
  const AntisymmetricMatrix a(fixture4());
  EXPECT_LT(std::abs(pfaffian(a) - 8.0), 1e-12);
  EXPECT_LT(std::abs(pfaffian_reference(a) - 8.0), 1e-12);
  EXPECT_LT(std::abs(a.matrix().determinant() - 64.0), 1e-10);
}

TEST(Pfaffian, SquareIsDeterminant) {
  Corpus c(31);
  for (int order = 2; order <= 10; order += 2) {
    for (int trial = 0; trial < 10; ++trial) {
      const AntisymmetricMatrix a(c.antisymmetric(order));
      const Complex pf = pfaffian(a);
      const Complex det = a.matrix().determinant();
      EXPECT_LE(std::abs(pf * pf - det), 1e-8 * std::abs(det)) << "order " << order;
    }
  }
}

TEST(Pfaffian, MatchesFirstRowExpansion) {
  Corpus c(32);
  for (int order = 2; order <= 10; order += 2) {
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix m = c.antisymmetric(order);
      const Complex expected = expand_first_row(m);
      EXPECT_LE(std::abs(pfaffian(AntisymmetricMatrix(m)) - expected), 1e-10 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST(Pfaffian, HandlesZeroLeadingEntry) {
  // Pivoting must cope with a(0, 1) = 0.
  Matrix m = fixture4();
  m(0, 1) = 0.0;
  m(1, 0) = 0.0;
  EXPECT_LT(std::abs(pfaffian(AntisymmetricMatrix(m)) - (-2.0 * 5.0 + 3.0 * 4.0)), 1e-12);
}

TEST(Pfaffian, SingularMatrixGivesZero) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 1) = 1.0;
  m(1, 0) = -1.0;
  EXPECT_EQ(pfaffian(AntisymmetricMatrix(m)), Complex(0.0));
}

TEST(Pfaffian, BlockDiagonalIsProduct) {
  Corpus c(33);
  const Matrix b1 = c.antisymmetric(4), b2 = c.antisymmetric(6);
  Matrix m = Matrix::Zero(10, 10);
  m.topLeftCorner(4, 4) = b1;
  m.bottomRightCorner(6, 6) = b2;
  const Complex expected = pfaffian(AntisymmetricMatrix(b1)) * pfaffian(AntisymmetricMatrix(b2));
  EXPECT_LE(std::abs(pfaffian(AntisymmetricMatrix(m)) - expected), 1e-10 * std::abs(expected));
}

TEST(Pfaffian, CongruenceScalesByDeterminant) {
  Corpus c(34);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = c.antisymmetric(6);
    const Matrix b = c.matrix(6, 6);
    const Complex lhs = pfaffian(AntisymmetricMatrix(b * a * b.transpose()));
    const Complex rhs = b.determinant() * pfaffian(AntisymmetricMatrix(a));
    EXPECT_LE(std::abs(lhs - rhs), 1e-9 * std::abs(rhs));
  }
}

TEST(PfaffianReference, AgreesWithParlettReid) {
  Corpus c(35);
  for (int order = 2; order <= 12; order += 2) {
    for (int trial = 0; trial < 3; ++trial) {
      const AntisymmetricMatrix a(c.antisymmetric(order));
      const Complex fast = pfaffian(a), slow = pfaffian_reference(a);
      EXPECT_LE(std::abs(fast - slow), 1e-10 * std::max(1.0, std::abs(slow))) << "order " << order;
    }
  }
}

TEST(PfaffianReference, RejectsLargeOrders) {
  EXPECT_THROW(pfaffian_reference(AntisymmetricMatrix(Matrix::Zero(14, 14))), ResourceLimitError);
  EXPECT_THROW(signed_pairing_sum(7, [](int, int) { return Complex(1.0); }), ResourceLimitError);
}

TEST(PfaffianReference, PairingSumOverFourIndices) {
  const Matrix m = fixture4();
  const Complex s = signed_pairing_sum(2, [&](int i, int j) { return m(i, j); });
  EXPECT_LT(std::abs(s - 8.0), 1e-12);
}

TEST(PfaffianDerivative, TwoByTwoScaling) {
  Matrix a(2, 2), adot(2, 2);
  a << 0.0, 1.0, -1.0, 0.0;
  adot << 0.0, 0.25, -0.25, 0.0;
  const Complex d = pfaffian_derivative(AntisymmetricMatrix(a), AntisymmetricMatrix(adot));
  EXPECT_LT(std::abs(d - 0.25), 1e-14);
}

TEST(PfaffianDerivative, MatchesCentralDifference) {
  Corpus c(36);
  const double eps = 1e-6;
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = c.antisymmetric(4), adot = c.antisymmetric(4);
    const Complex fd = (pfaffian(AntisymmetricMatrix(a + eps * adot)) -
                        pfaffian(AntisymmetricMatrix(a - eps * adot))) /
                       (2 * eps);
    const Complex d = pfaffian_derivative(AntisymmetricMatrix(a), AntisymmetricMatrix(adot));
    EXPECT_LT(std::abs(d - fd), 1e-6);
  }
}

TEST(PfaffianDerivative, SingularBaseReportsCondition) {
  Matrix a = Matrix::Zero(4, 4);
  a(0, 1) = 1.0;
  a(1, 0) = -1.0;
  try {
    pfaffian_derivative(AntisymmetricMatrix(a), AntisymmetricMatrix(fixture4()));
    FAIL() << "expected a singularity error";
  } catch (const SingularityError& e) {
    EXPECT_GT(e.condition(), kMaxCondition);
  }
}

TEST(PfaffianDerivative, RejectsOrderMismatch) {
  EXPECT_THROW(pfaffian_derivative(AntisymmetricMatrix(fixture4()), AntisymmetricMatrix(Matrix::Zero(2, 2))),
               DomainError);
}

}  // namespace
}  // namespace carent
