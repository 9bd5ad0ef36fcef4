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


#include "qobj/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace qobj {

InvariantError::InvariantError(std::string invariant, double magnitude, const std::string& detail)
    : Error("invariant '" + invariant + "' violated (magnitude " + std::to_string(magnitude) + ")" +
            (detail.empty() ? std::string{} : ": " + detail)),
      invariant_(std::move(invariant)),
      magnitude_(magnitude) {}

DimensionGuardError::DimensionGuardError(std::size_t requested, std::size_t limit,
                                         const std::string& what)
    : Error(what + ": dimension " + std::to_string(requested) + " exceeds limit " +
            std::to_string(limit)),
      requested_(requested),
      limit_(limit) {}

std::size_t total_dimension(const Dims& dims) {
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d != 0 && total > std::numeric_limits<std::size_t>::max() / d) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= d;
  }
  return total;
}

DensityMatrix::DensityMatrix(CMatrix entries, Dims dims, double tol)
    : entries_(std::move(entries)), dims_(std::move(dims)), tol_(tol) {
  validate();
}

DensityMatrix::DensityMatrix(CMatrix entries, Dims dims, double tol, Unchecked)
    : entries_(std::move(entries)), dims_(std::move(dims)), tol_(tol) {
  validate_structure();
}

DensityMatrix DensityMatrix::assume_valid(CMatrix entries, Dims dims, double tol) {
  return DensityMatrix(std::move(entries), std::move(dims), tol, Unchecked{});
}

DensityMatrix DensityMatrix::pure(const CVector& psi, Dims dims, double tol) {
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > tol) {
    throw InvariantError("unit_trace", std::abs(norm * norm - 1.0), "state vector not normalized");
  }
  CMatrix m = psi * psi.adjoint();
  return DensityMatrix(std::move(m), std::move(dims), tol, Unchecked{});
}

DensityMatrix DensityMatrix::maximally_mixed(Dims dims) {
  const std::size_t d = total_dimension(dims);
  if (d > kMaxTotalDim) throw DimensionGuardError(d, kMaxTotalDim, "maximally_mixed");
  CMatrix m = CMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)) /
              static_cast<double>(d);
  return DensityMatrix(std::move(m), std::move(dims), kStateTol, Unchecked{});
}

DensityMatrix DensityMatrix::basis_state(Dims dims, std::span<const std::size_t> digits) {
  if (digits.size() != dims.size()) {
    throw InvalidArgument("basis_state: one digit per subsystem required");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (digits[i] >= dims[i]) throw InvalidArgument("basis_state: digit out of range");
    index = index * dims[i] + digits[i];
  }
  const std::size_t total = total_dimension(dims);
  if (total > kMaxTotalDim) throw DimensionGuardError(total, kMaxTotalDim, "basis_state");
  const auto d = static_cast<Eigen::Index>(total);
  CMatrix m = CMatrix::Zero(d, d);
  m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return DensityMatrix(std::move(m), std::move(dims), kStateTol, Unchecked{});
}

void DensityMatrix::validate_structure() const {
  if (dims_.empty()) throw InvariantError("dims", 0.0, "no subsystems");
  for (std::size_t d : dims_) {
    if (d < 2) throw InvariantError("dims", static_cast<double>(d), "subsystem dimension below 2");
  }
  if (entries_.rows() != entries_.cols()) {
    throw InvariantError("square", static_cast<double>(entries_.rows() - entries_.cols()));
  }
  const std::size_t expected = total_dimension(dims_);
  if (expected != static_cast<std::size_t>(entries_.rows())) {
    throw InvariantError("dims_product",
                         std::abs(static_cast<double>(expected) - static_cast<double>(entries_.rows())),
                         "product of dims does not match matrix side");
  }
  if (!entries_.allFinite()) {
    throw InvariantError("finite", std::numeric_limits<double>::infinity());
  }
  const double herm = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol_) throw InvariantError("hermitian", herm);
  const double trace_err = std::abs(entries_.trace() - cplx(1.0, 0.0));
  if (trace_err > tol_) throw InvariantError("unit_trace", trace_err);
}

void DensityMatrix::validate() const {
  validate_structure();
  const Spectrum s = eig_hermitian(entries_);
  const double min_eig = s.eigenvalues.minCoeff();
  if (min_eig < -tol_) throw InvariantError("psd", -min_eig, "negative eigenvalue");
}

void PartitionSpec::validate(std::size_t num_subsystems) const {
  std::vector<int> seen(num_subsystems, 0);
  auto mark = [&](std::size_t idx) {
    if (idx >= num_subsystems) throw InvalidArgument("partition index out of range");
    if (seen[idx]++) throw InvalidArgument("partition roles overlap");
  };
  mark(system_index);
  for (auto i : observed) mark(i);
  for (auto i : traced) mark(i);
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c == 0; })) {
    throw InvalidArgument("partition roles do not cover every subsystem");
  }
}

}  // namespace qobj
