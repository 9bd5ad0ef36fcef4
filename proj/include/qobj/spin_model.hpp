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
#include <cstdint>
#include <optional>
#include <vector>

#include "qobj/density_matrix.hpp"

namespace qobj {

struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Central spin S coupled to N environment spins by
///   H = (1/2) sigma_z x sum_k g_k sigma_z^(k),
/// so the environment evolves under U_m^(k) = exp(-i t m g_k sigma_z / 2)
/// when S has spin m. Basis index 0 is m = +1, index 1 is m = -1 (likewise
/// for environment spins).
///
/// Every environment spin starts in
///   rho_0 = R diag(lambda, 1 - lambda) R^dagger,
///   R = exp(-i alpha sigma_z / 2) exp(-i beta sigma_y / 2) exp(-i gamma sigma_z / 2).
struct SpinSpinModel {
  std::vector<double> couplings;
  /// Initial system state, entries alpha_{mm'}.
  CMatrix system_state = CMatrix::Constant(2, 2, 0.5);
  double env_lambda = 0.1;
  EulerAngles euler;
  double time = 0.0;

  void validate() const;
  std::size_t environments() const noexcept { return couplings.size(); }
  double alpha_plus() const { return system_state(0, 0).real(); }
  double alpha_minus() const { return system_state(1, 1).real(); }
  cplx alpha_coherence() const { return system_state(0, 1); }
};

/// g_k ~ U[0, 1] from mt19937_64(seed).
std::vector<double> draw_couplings(std::size_t n, std::uint64_t seed);

/// First ceil(f N) environment indices.
IndexSet prefix_fraction(std::size_t n, double f);

/// diag(exp(-i t m g_k / 2), exp(+i t m g_k / 2)).
CMatrix branch_unitary(const SpinSpinModel& model, int m, std::size_t k);

CMatrix env_initial_state(const SpinSpinModel& model);

/// U_m^(k) rho_0 U_m^(k)dagger.
CMatrix conditional_env_state(const SpinSpinModel& model, int m, std::size_t k);

/// Bloch vector (2 lambda - 1)(sin b cos a, sin b sin a, cos b) of rho_0.
Eigen::Vector3d env_bloch_vector(const SpinSpinModel& model);

/// rho_{S:fE}(t) with S first and `observed` in ascending order, assembled
/// from the branch structure without building the full state.
DensityMatrix partially_traced_state(const SpinSpinModel& model, const IndexSet& observed);

/// U rho(0) U^dagger for all N + 1 spins from the diagonal Hamiltonian.
/// Limited to N + 1 <= 12.
DensityMatrix brute_force_evolution(const SpinSpinModel& model);

/// prod_{k in traced} [cos(g_k t) + i (2 lambda - 1) cos(beta) sin(g_k t)]
/// = prod tr[rho_0 U_+^dagger U_-]. The |+><-| coherence of the reduced
/// state carries alpha_{+-} times the complex conjugate of this value.
cplx decoherence_factor(const SpinSpinModel& model, const IndexSet& traced);

/// sqrt(1 - (2 lambda - 1)^2 sin^2(beta) sin^2(g_k t)).
double branch_fidelity(const SpinSpinModel& model, std::size_t k);

/// Product of branch fidelities over a macrofraction.
double macrofraction_fidelity(const SpinSpinModel& model, const IndexSet& mac);

/// Macrofractions must be nonempty, disjoint and cover `observed`.
void validate_macrofractions(const IndexSet& observed, const std::vector<IndexSet>& macrofractions);

/// Upper bound on the trace distance to the nearest SBS state:
///   sum_{m != m'} |alpha_{mm'}| |Gamma_traced| + sum_{m != m'} sqrt(alpha_m alpha_m') sum_mac F_mac.
double sbs_bound(const SpinSpinModel& model, const IndexSet& observed, const std::vector<IndexSet>& macrofractions);

/// Block-diagonal part of rho_{S:fE} with each macrofraction branch
/// conditioned on its Helstrom projector, so the branches have disjoint
/// supports. S first, observed spins in ascending order.
DensityMatrix candidate_sbs_state(const SpinSpinModel& model, const IndexSet& observed,
                                  const std::vector<IndexSet>& macrofractions);

inline constexpr std::size_t kMaxObservedSpins = 15;

/// H(rho_fE) for rho_fE = sum_m alpha_m (x)_k rho_m^(k), in bits. Each spin
/// is rotated to a real frame in which the two branches differ only by the
/// sign of sigma_x, which turns rho_fE into a real symmetric matrix that
/// splits into parity blocks when alpha_+ = alpha_-. Limited to 15 spins
/// (14 when alpha_+ != alpha_-).
double environment_fraction_entropy(const SpinSpinModel& model, const IndexSet& observed);

struct FractionResult {
  double f = 0.0;
  /// Absent for bound-only evaluations.
  std::optional<double> I_SfE;
  double H_S = 0.0;
  double epsilon = 0.0;
  double gamma_abs = 0.0;
  /// Sum of the macrofraction fidelities.
  double fid_mac = 0.0;
};

/// Entropy of the 2x2 state with populations alpha_m and coherence
/// alpha_{+-} Gamma.
double dephased_system_entropy(const SpinSpinModel& model, cplx gamma);

/// I(S:fE) = H(S) + H(fE) - fN h(lambda) - h(lambda^{(1-f)E}) with the bound
/// terms. An empty `macrofractions` means one macrofraction equal to fE.
FractionResult mutual_information_SfE(const SpinSpinModel& model, const IndexSet& observed,
                                      const std::vector<IndexSet>& macrofractions = {});

/// Same as mutual_information_SfE without the information term (no
/// dimension limit).
FractionResult sbs_bound_fraction(const SpinSpinModel& model, const IndexSet& observed,
                                  const std::vector<IndexSet>& macrofractions = {});

}  // namespace qobj
