// Copyright 2026 The qobjectivity Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qobj {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments that violate an operation's preconditions
/// (overlapping index sets, empty selections, mismatched dimensions, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A state or operator failed one of its structural invariants. Carries the
/// invariant name and the magnitude of the violation so front ends can report
/// them verbatim.
class InvariantError : public Error {
 public:
  InvariantError(std::string invariant, double magnitude, const std::string& detail = {});

  const std::string& invariant() const noexcept { return invariant_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  std::string invariant_;
  double magnitude_;
};

/// Requested total Hilbert-space dimension exceeds a configured guard.
class DimensionGuardError : public Error {
 public:
  DimensionGuardError(std::size_t requested, std::size_t limit, const std::string& what);

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

/// Linear-algebra backend failure (eigensolver did not converge, matrix
/// square root of an indefinite intermediate, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qobj
