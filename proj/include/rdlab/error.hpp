// Copyright 2026 The rdlab Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace rdlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (e.g. m.dim != d_A * d_B).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition (non-Hermitian generator,
/// non-normalized amplitudes, index out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by kraus_from_choi when the Choi matrix has an eigenvalue below
/// -tol. Carries the offending (most negative) eigenvalue.
class NotCompletelyPositive : public Error {
 public:
  explicit NotCompletelyPositive(double eigenvalue)
      : Error("map is not completely positive: Choi eigenvalue " +
              std::to_string(eigenvalue)),
        eigenvalue_(eigenvalue) {}

  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

}  // namespace rdlab
