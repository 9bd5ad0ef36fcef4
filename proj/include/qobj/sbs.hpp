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
#include <map>
#include <optional>
#include <vector>

#include "qobj/info_measures.hpp"
#include "qobj/random.hpp"

namespace qobj {

/// Spectrum broadcast structure
///   sum_i p_i |i><i| x rho_i
/// where rho_i is either a product rho_i^1 x ... x rho_i^N (strong
/// independence) or one correlated state on all subenvironments
/// (generalized form). Branches must be perfectly distinguishable on every
/// single subenvironment.
struct SbsSpec {
  std::vector<double> pointer_probs;
  /// Columns are the pointer states |i>, one per probability.
  CMatrix pointer_basis;
  /// Product form: branches[i][k] lives on subenvironment k.
  /// Joint form: branches[i] holds exactly one state over every subenvironment.
  std::vector<std::vector<DensityMatrix>> branches;
  bool joint = false;
  double tol = kStateTol;

  /// Throws InvariantError("probabilities" | "orthonormal" | "branch_overlap")
  /// or InvalidArgument on shape mismatches.
  void validate() const;
  /// Dimensions of the subenvironments.
  Dims environment_dims() const;
};

/// S first, then the subenvironments in order.
DensityMatrix build_sbs(const SbsSpec& spec);

struct SbsCheckOptions {
  double tolerance = 1e-9;
  /// Relative eigenvalue gap of rho_S below which the pointer basis is
  /// considered ambiguous.
  double degeneracy_gap = 1e-6;
  /// Replaces the rho_S eigenbasis (columns are pointer states).
  std::optional<CMatrix> pointer_basis;
  /// Seed of the generic environment observable used to split a degenerate
  /// rho_S spectrum.
  std::uint64_t seed = 0x0b5e55edULL;
  /// Also evaluate agreement and Bohr non-disturbance with the
  /// discrimination projectors.
  bool with_measurements = true;
};

struct SbsReport {
  std::vector<double> pointer_probs;
  CMatrix pointer_basis;
  /// rho_S had a degenerate spectrum and the basis was fixed by the
  /// system-environment correlations.
  bool pointer_degenerate = false;
  bool pointer_override = false;
  /// sum_{i != j} || <i|rho|j> ||_tr
  double coherence_norm = 0.0;
  /// max over pairs i != j and subenvironments k of F(rho_i^k, rho_j^k).
  double branch_fidelities = 0.0;
  /// pair_fidelity(i, j) = max_k F(rho_i^k, rho_j^k); zero for empty branches.
  Eigen::MatrixXd pair_fidelity;
  /// coherence_norm + sum_{i != j} sqrt(p_i p_j) sum_k F(rho_i^k, rho_j^k)
  double epsilon_bound = 0.0;
  double disagreement_mass = 0.0;
  double bohr_nondisturbance_residual = 0.0;
  bool is_sbs = false;
  bool agreement_ok = false;
  double tolerance = 0.0;
};

/// Decomposes rho into pointer blocks on `system_index` and checks the
/// fine-grained SBS conditions on every single-subsystem reduction. Each
/// remaining subsystem counts as one subenvironment; regroup factors first
/// to test macrofractions.
SbsReport check_sbs(const DensityMatrix& rho, std::size_t system_index, const SbsCheckOptions& options = {});

/// Per-subsystem measurements keyed by subsystem index.
using MeasurementMap = std::map<std::size_t, Measurement>;

/// Trace distance between rho and the state dephased by every supplied
/// projective measurement. Throws InvalidArgument for POVMs.
double bohr_nondisturbance_residual(const DensityMatrix& rho, const MeasurementMap& measurements);

/// Outcome statistics of local measurements.
struct JointDistribution {
  /// Measured subsystems, ascending.
  IndexSet parties;
  std::vector<std::size_t> outcomes;
  /// Row-major over `parties` (first party most significant).
  std::vector<double> probs;

  double probability(std::span<const std::size_t> outcome) const;
  /// Mass on outcome tuples whose entries are not all equal.
  double disagreement_mass() const;
};

/// p(i, i_1, ..., i_n) for the measurement on `system_index` and those on
/// `subset`. `measurements` must hold an entry for each of them.
JointDistribution agreement_distribution(const DensityMatrix& rho, std::size_t system_index,
                                         const MeasurementMap& measurements, const IndexSet& subset);

/// Projectors onto the branch supports of subsystem `k`, one per pointer
/// value: eigenvectors of sum_i (i+1) p_i rho_i^k, each assigned to the
/// branch with the largest weight p_i <v|rho_i^k|v>.
Measurement discrimination_measurement(const std::vector<CMatrix>& weighted_branches);

// --- quantum Markov fixtures -------------------------------------------------

/// One block of sum_j p_j rho_{S E_j^L} x rho_{E_j^R E'}. `left` has dims
/// [d_S] or [d_S, d_L]; `right` has dims [d_E'] or [d_R, d_E'] (a missing
/// factor has dimension one).
struct MarkovBlock {
  double weight = 1.0;
  DensityMatrix left;
  DensityMatrix right;
};

struct MarkovFixture {
  /// Dims [d_S, d_E, d_E'] with d_E = sum_j d_L d_R.
  DensityMatrix state;
  /// Projector onto block j of E.
  std::vector<CMatrix> block_projectors;
};

MarkovFixture build_markov_fixture(const std::vector<MarkovBlock>& blocks, double tol = kStateTol);

// --- strong quantum Darwinism -------------------------------------------------

struct StrongQdTolerances {
  double chi = 1e-3;
  double acc = 1e-3;
  double indep = 1e-3;
};

struct StrongQdReport {
  double H_S = 0.0;
  double I = 0.0;
  double chi = 0.0;
  /// |I(S:E) - chi(E|S)|
  double cond_chi = 0.0;
  /// |I_acc(S:E_k) - H(S)| per subenvironment.
  std::vector<double> cond_acc;
  /// I(E_1...E_N|S); zero with a single subenvironment.
  double cond_indep = 0.0;
  bool chi_ok = false;
  bool acc_ok = false;
  bool indep_ok = false;
  bool pass = false;
  OptimizerConfig optimizer;
  StrongQdTolerances tolerances;
};

StrongQdReport strong_qd_check(const DensityMatrix& rho, std::size_t system_index, const OptimizerConfig& cfg,
                               const StrongQdTolerances& tolerances = {});

// --- experimental target states -----------------------------------------------

/// Graph state on S (index 0) and N environment qubits:
///   prod C(theta_{j,j+1}) prod C(phi_{S,k}) |+>^(N+1),
/// thetas couple consecutive environment qubits (N-1 values), phis couple S
/// to each environment qubit (N values).
DensityMatrix build_star_graph_state(std::size_t n, const std::vector<double>& thetas,
                                     const std::vector<double>& phis);

/// alpha |0>|0...0> + beta |1> (x)_i |theta_i>, |theta> = cos(theta/2)|0> + sin(theta/2)|1>.
DensityMatrix build_branching_state(cplx alpha, cplx beta, const std::vector<double>& thetas);

/// |<theta^mac|0^mac>| = prod_{i in mac} cos(theta_i / 2).
double branching_macro_overlap(const std::vector<double>& thetas, const IndexSet& mac);

// --- random generators ----------------------------------------------------------

struct SbsGenOptions {
  std::size_t environments = 2;
  std::size_t system_dim = 2;
  /// Largest subenvironment dimension; each is drawn from [system_dim, max].
  std::size_t max_env_dim = 3;
  bool joint = false;
  /// Minimum spacing between pointer probabilities.
  double min_prob_gap = 1e-3;
};

SbsSpec random_sbs_spec(const SbsGenOptions& options, Rng& rng);

/// sum_ij p_ij |a_i><a_i| x |b_j><b_j| with random local bases.
DensityMatrix random_classical_classical(std::size_t da, std::size_t db, Rng& rng);

/// sum_j p_j rho_j^A x |b_j><b_j| (classical on B, index 1).
DensityMatrix random_classical_quantum(std::size_t da, std::size_t db, Rng& rng);

}  // namespace qobj
