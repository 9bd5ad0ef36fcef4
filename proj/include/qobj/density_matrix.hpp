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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qobj/errors.hpp"

namespace qobj {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Subsystem dimensions, most significant factor first.
using Dims = std::vector<std::size_t>;
/// Ordered set of subsystem indices.
using IndexSet = std::vector<std::size_t>;

inline constexpr double kStateTol = 1e-9;
inline constexpr std::size_t kMaxTotalDim = std::size_t{1} << 16;
/// Entropies are reported in bits.
inline constexpr double kEntropyLogBase = 2.0;

std::size_t total_dimension(const Dims& dims);

/// Complex Hermitian, unit-trace, positive semidefinite matrix tagged with
/// the dimensions of its tensor factors.
///
/// The checked constructor enforces every invariant within `tol`:
/// product(dims) == side length, each dim >= 2, max|rho - rho^dagger| <= tol,
/// |tr rho - 1| <= tol and lambda_min >= -tol. Violations raise
/// InvariantError naming the failed invariant.
class DensityMatrix {
 public:
  DensityMatrix(CMatrix entries, Dims dims, double tol = kStateTol);

  /// Skips the O(d^3) positivity check; structure (dims, Hermiticity, trace)
  /// is still verified. Used for outputs of operations that preserve
  /// positivity by construction.
  static DensityMatrix assume_valid(CMatrix entries, Dims dims, double tol = kStateTol);

  /// |psi><psi| for a normalized vector.
  static DensityMatrix pure(const CVector& psi, Dims dims, double tol = kStateTol);
  static DensityMatrix maximally_mixed(Dims dims);
  /// Computational-basis projector |d0 d1 ...><d0 d1 ...|.
  static DensityMatrix basis_state(Dims dims, std::span<const std::size_t> digits);

  const CMatrix& matrix() const noexcept { return entries_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t subsystems() const noexcept { return dims_.size(); }
  std::size_t dim_of(std::size_t subsystem) const { return dims_.at(subsystem); }
  double tol() const noexcept { return tol_; }

  /// Re-runs the full invariant check (including positivity).
  void validate() const;

 private:
  struct Unchecked {};
  DensityMatrix(CMatrix entries, Dims dims, double tol, Unchecked);
  void validate_structure() const;

  CMatrix entries_;
  Dims dims_;
  double tol_;
};

/// Assignment of tensor factors to the roles S, fE (observed) and (1-f)E.
struct PartitionSpec {
  std::size_t system_index = 0;
  IndexSet observed;
  IndexSet traced;

  /// Roles must be disjoint and jointly cover 0..n-1.
  void validate(std::size_t num_subsystems) const;
};

/// Eigen-decomposition of a Hermitian matrix, eigenvalues sorted descending.
struct Spectrum {
  RVector eigenvalues;
  CMatrix eigenvectors;
};

// --- composition and reduction ---------------------------------------------

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b,
                     std::size_t max_dim = kMaxTotalDim);
DensityMatrix tensor(std::span<const DensityMatrix> factors, std::size_t max_dim = kMaxTotalDim);

/// Traces out every subsystem not in `keep`. The result keeps the original
/// relative order of the retained factors regardless of the order of `keep`.
DensityMatrix partial_trace(const DensityMatrix& rho, const IndexSet& keep);

/// Reorders tensor factors: factor i of the result is factor order[i] of rho.
DensityMatrix permute_subsystems(const DensityMatrix& rho, const IndexSet& order);

/// Merges groups of factors into single factors (each group's members in the
/// listed order). Groups must partition 0..n-1; a group of size one is a
/// plain reorder.
DensityMatrix regroup(const DensityMatrix& rho, const std::vector<IndexSet>& groups);

/// U rho U^dagger.
DensityMatrix apply_unitary(const DensityMatrix& rho, const CMatrix& unitary);

/// Kronecker product a x b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// 1 x ... x op x ... x 1 acting on `subsystem`.
CMatrix embed_operator(const CMatrix& op, std::size_t subsystem, const Dims& dims);

IndexSet complement(std::size_t n, const IndexSet& set);

// --- spectra and functionals ------------------------------------------------

Spectrum eig_hermitian(const CMatrix& m);
Spectrum eig_hermitian(const DensityMatrix& rho);

/// -sum lambda log2 lambda with 0 log 0 = 0. Values in [-tol, 0) are clipped,
/// values below -tol raise InvariantError("psd").
double entropy_from_eigenvalues(std::span<const double> eigenvalues, double tol = kStateTol);
double von_neumann_entropy(const DensityMatrix& rho);
double binary_entropy(double p);
double shannon_entropy(std::span<const double> probabilities);

/// Uhlmann root fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);
/// Sum of singular values.
double trace_norm(const CMatrix& m);
/// Principal square root of a PSD matrix; eigenvalues in [-tol, 0) clipped.
CMatrix sqrt_psd(const CMatrix& m, double tol = kStateTol);

}  // namespace qobj
