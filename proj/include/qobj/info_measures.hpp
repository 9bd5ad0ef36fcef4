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

#include <cstdint>
#include <optional>
#include <vector>

#include "qobj/density_matrix.hpp"

namespace qobj {

enum class MeasurementKind { projective_rank1, projective, povm };

/// Generalized measurement on one subsystem: PSD elements summing to 1.
struct Measurement {
  std::vector<CMatrix> elements;
  MeasurementKind kind = MeasurementKind::povm;

  std::size_t dim() const { return elements.empty() ? 0 : static_cast<std::size_t>(elements.front().rows()); }
  std::size_t outcomes() const { return elements.size(); }

  /// Throws InvariantError ("completeness", "orthogonality", "rank1", "psd").
  void validate(double tol = 1e-9) const;

  static Measurement computational(std::size_t d);
  /// Rank-1 projective measurement onto the columns of a unitary.
  static Measurement from_basis(const CMatrix& basis);
  /// Qubit basis {(1 + n.sigma)/2, (1 - n.sigma)/2} for a unit Bloch vector n.
  static Measurement qubit(const Eigen::Vector3d& n);
  static Measurement identity(std::size_t d);
};

/// Bloch-sphere search over qubit bases.
///
/// Candidate directions are the first `grid_points` entries of a nested
/// golden-ratio sequence on the upper hemisphere (so a larger grid always
/// contains every point of a smaller one), rotated by a seeded random SO(3)
/// element. The best candidate is then polished by `refine_iters` rounds of
/// coordinate-wise golden-section search with a halving bracket. Every
/// reported maximum is a lower bound on the true maximum.
struct OptimizerConfig {
  int grid_points = 256;
  int refine_iters = 12;
  std::uint64_t seed = 0x5eedULL;

  void validate() const;
};

/// Result of a maximization over measurements.
struct OptimizedValue {
  double value = 0.0;
  /// Maximizing measurement (one per measured party).
  std::vector<Measurement> argmax;
  std::size_t evaluations = 0;
  /// True when the last refinement round improved the objective by < 1e-12.
  bool converged = false;
  /// False when the value came from a caller-supplied basis (no search).
  bool optimized = true;
};

// --- entropic quantities (bits) --------------------------------------------

/// I(A:B) = H(A) + H(B) - H(AB). A and B must be disjoint, nonempty and
/// cover every subsystem of rho.
double mutual_information(const DensityMatrix& rho, const IndexSet& a, const IndexSet& b);

/// I(A:B|C) = H(AC) + H(BC) - H(C) - H(ABC). Parts disjoint and covering;
/// C may be empty (reduces to I(A:B)).
double conditional_mutual_information(const DensityMatrix& rho, const IndexSet& a, const IndexSet& b,
                                      const IndexSet& c);

/// H(X|Y) = H(XY) - H(Y) on the reduction to X u Y.
double conditional_entropy(const DensityMatrix& rho, const IndexSet& x, const IndexSet& y);

/// I(E_1...E_N|S) = sum_k H(E_k|S) - H(E_1...E_N|S), where E_k runs over
/// every subsystem other than S. Requires at least two environments.
double multipartite_cmi(const DensityMatrix& rho, std::size_t system_index);

/// Classical mutual information (bits) of a joint distribution p(a, b).
double classical_mutual_information(const Eigen::MatrixXd& joint);

// --- measurement-optimized quantities --------------------------------------

/// chi(E|S): max over rank-1 bases on S of H(sum p_i rho_E|i) - sum p_i H(rho_E|i),
/// E being every other subsystem. S must be a qubit unless `basis_override`
/// fixes the measurement.
OptimizedValue holevo_quantity(const DensityMatrix& rho, std::size_t system_index,
                               const OptimizerConfig& cfg,
                               const std::optional<Measurement>& basis_override = std::nullopt);

/// delta = I(measured : rest) - max_M I[(M x 1) rho] over rank-1 projective M
/// on the measured subsystem (a qubit).
OptimizedValue discord_one_sided(const DensityMatrix& rho, std::size_t measured_side,
                                 const OptimizerConfig& cfg,
                                 const std::optional<Measurement>& basis_override = std::nullopt);

/// D(A:B) = I(A:B) - max over product rank-1 bases of the classical mutual
/// information of the outcome distribution. Two-qubit states only.
OptimizedValue discord_two_sided(const DensityMatrix& rho, const OptimizerConfig& cfg);

/// I_acc(S:E) = max over measurements M on S of I[(M x 1) rho], restricted to
/// rank-1 projective M (the outcome register replaces S).
OptimizedValue accessible_information(const DensityMatrix& rho, std::size_t system_index,
                                      const OptimizerConfig& cfg,
                                      const std::optional<Measurement>& basis_override = std::nullopt);

/// Classical-quantum state sum_i |i><i| x tr_S[(M_i x 1) rho], outcome register
/// placed at `system_index`.
DensityMatrix measure_subsystem(const DensityMatrix& rho, std::size_t subsystem, const Measurement& m);

/// Non-selective measurement channel sum_i K_i rho K_i^dagger with
/// K_i = sqrt(M_i) on `subsystem`; keeps the input dims.
DensityMatrix apply_measurement_channel(const DensityMatrix& rho, std::size_t subsystem,
                                        const Measurement& m);

// --- reports ----------------------------------------------------------------

/// Every quantity the checker reports for a state with a distinguished S.
/// Optional fields are absent when the state does not meet the operation's
/// preconditions (e.g. two-sided discord off two-qubit states).
struct MeasuresReport {
  double H_S = 0.0;
  double I = 0.0;
  std::optional<double> chi;
  std::optional<double> discord_one_sided;
  std::optional<double> discord_two_sided;
  std::optional<double> I_acc;
  std::optional<double> cmi_multi;
  OptimizerConfig optimizer;
  bool chi_converged = false;
  bool I_acc_converged = false;
  bool discord_two_sided_converged = false;
};

MeasuresReport measures_report(const DensityMatrix& rho, std::size_t system_index,
                               const OptimizerConfig& cfg);

enum class FractionConvention { prefix, average_exhaustive, average_sampled };

struct QdOptions {
  FractionConvention convention = FractionConvention::prefix;
  /// Subsets per fraction size for average_sampled.
  std::size_t sample_count = 32;
  std::uint64_t seed = 0;
  /// Also report chi(fE|S) and delta(fE|S) = I - chi per fraction (qubit S).
  bool with_optimizers = false;
  OptimizerConfig optimizer;
  double tol = 1e-9;
};

struct QdFractionRow {
  std::size_t size = 0;
  double f = 0.0;
  double I = 0.0;
  bool passes = false;
  std::optional<double> chi;
  std::optional<double> discord;
};

struct QdReport {
  double H_S = 0.0;
  double delta = 0.0;
  FractionConvention convention = FractionConvention::prefix;
  std::vector<QdFractionRow> rows;
};

/// Evaluates (1 - delta) H(S) <= I(S:fE) <= H(S) + tol for every fraction
/// size 1..N of the environments (all subsystems except S). Exhaustive
/// averaging is limited to N <= 12.
QdReport qd_condition_check(const DensityMatrix& rho, std::size_t system_index, double delta,
                            const QdOptions& options = {});

}  // namespace qobj
