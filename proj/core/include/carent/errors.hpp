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

#ifndef CARENT_ERRORS_HPP
#define CARENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace carent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural constraint failed (Hermiticity, Γ-anticommutation, admissibility, ...).
/// `violation` carries the offending norm when one is available.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, double violation = 0.0)
      : Error(what), violation_(violation) {}
  double violation() const noexcept { return violation_; }

 private:
  double violation_;
};

/// An argument outside the mathematical domain (beta <= 0, odd order, n = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be inverted is singular or too badly conditioned.
class SingularityError : public Error {
 public:
  SingularityError(const std::string& what, double condition)
      : Error(what), condition_(condition) {}
  double condition() const noexcept { return condition_; }

 private:
  double condition_;
};

/// h has a null eigenvector where the operation requires none.
class ZeroModeError : public Error {
 public:
  using Error::Error;
};

/// Input too large for a combinatorial or exponential-size routine.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Relative entropy needs the reference density to be strictly positive.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// A quantity that is real (or nonnegative) in exact arithmetic came out otherwise
/// beyond round-off; signals an upstream inconsistency rather than bad input.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace carent

#endif  // CARENT_ERRORS_HPP
