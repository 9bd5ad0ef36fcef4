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


#include <algorithm>
#include <cmath>
#include <random>

#include "qobj/spin_model.hpp"

namespace qobj {
namespace {

constexpr std::size_t kMaxBruteForceSpins = 12;

CMatrix rz(double phi) {
  CMatrix r = CMatrix::Zero(2, 2);
  r(0, 0) = std::polar(1.0, -phi / 2);
  r(1, 1) = std::polar(1.0, phi / 2);
  return r;
}

CMatrix ry(double beta) {
  CMatrix r(2, 2);
  r << std::cos(beta / 2), -std::sin(beta / 2), std::sin(beta / 2), std::cos(beta / 2);
  return r;
}

void check_env_indices(const SpinSpinModel& model, const IndexSet& set, const char* what) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] >= model.environments()) throw InvalidArgument(std::string(what) + ": environment index out of range");
    if (i > 0 && set[i] <= set[i - 1]) throw InvalidArgument(std::string(what) + ": indices must be strictly ascending");
  }
}

// |m><m'| x (x)_{k in spins} U_m rho_0 U_m'^dagger
CMatrix branch_operator(const SpinSpinModel& model, int m, int mp, const IndexSet& spins) {
  const CMatrix rho0 = env_initial_state(model);
  CMatrix out = CMatrix::Identity(1, 1);
  for (auto k : spins) out = kron(out, branch_unitary(model, m, k) * rho0 * branch_unitary(model, mp, k).adjoint());
  return out;
}

}  // namespace

void SpinSpinModel::validate() const {
  if (couplings.empty()) throw InvalidArgument("SpinSpinModel: need at least one environment spin");
  for (double g : couplings)
    if (!std::isfinite(g)) throw InvalidArgument("SpinSpinModel: non-finite coupling");
  if (system_state.rows() != 2 || system_state.cols() != 2) throw InvalidArgument("SpinSpinModel: system state must be 2x2");
  DensityMatrix(system_state, {2});
  if (!(env_lambda >= 0.0 && env_lambda <= 1.0)) throw InvalidArgument("SpinSpinModel: lambda must lie in [0, 1]");
  if (!(time >= 0.0) || !std::isfinite(time)) throw InvalidArgument("SpinSpinModel: time must be finite and >= 0");
  if (!std::isfinite(euler.alpha) || !std::isfinite(euler.beta) || !std::isfinite(euler.gamma))
    throw InvalidArgument("SpinSpinModel: non-finite Euler angle");
}

std::vector<double> draw_couplings(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::vector<double> g(n);
  for (auto& v : g) v = uniform(rng);
  return g;
}

IndexSet prefix_fraction(std::size_t n, double f) {
  if (!(f >= 0.0 && f <= 1.0)) throw InvalidArgument("prefix_fraction: f must lie in [0, 1]");
  const auto count = static_cast<std::size_t>(std::max(0.0, std::ceil(f * static_cast<double>(n) - 1e-9)));
  IndexSet out(std::min(count, n));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

CMatrix branch_unitary(const SpinSpinModel& model, int m, std::size_t k) {
  if (m != 1 && m != -1) throw InvalidArgument("branch_unitary: m must be +1 or -1");
  if (k >= model.environments()) throw InvalidArgument("branch_unitary: environment index out of range");
  return rz(model.time * m * model.couplings[k]);
}

CMatrix env_initial_state(const SpinSpinModel& model) {
  const CMatrix r = rz(model.euler.alpha) * ry(model.euler.beta) * rz(model.euler.gamma);
  CMatrix d = CMatrix::Zero(2, 2);
  d(0, 0) = model.env_lambda;
  d(1, 1) = 1.0 - model.env_lambda;
  const CMatrix rho = r * d * r.adjoint();
  return 0.5 * (rho + rho.adjoint());
}

CMatrix conditional_env_state(const SpinSpinModel& model, int m, std::size_t k) {
  const CMatrix u = branch_unitary(model, m, k);
  return u * env_initial_state(model) * u.adjoint();
}

Eigen::Vector3d env_bloch_vector(const SpinSpinModel& model) {
  const double r = 2.0 * model.env_lambda - 1.0;
  const double a = model.euler.alpha, b = model.euler.beta;
  return r * Eigen::Vector3d(std::sin(b) * std::cos(a), std::sin(b) * std::sin(a), std::cos(b));
}

DensityMatrix partially_traced_state(const SpinSpinModel& model, const IndexSet& observed) {
  model.validate();
  check_env_indices(model, observed, "partially_traced_state");
  if (observed.size() > kMaxObservedSpins)
    throw DimensionGuardError(std::size_t{1} << (observed.size() + 1), std::size_t{1} << (kMaxObservedSpins + 1),
                              "partially_traced_state: observed fraction too large");
  IndexSet traced = complement(model.environments(), observed);

  const cplx coherence = model.alpha_coherence() * std::conj(decoherence_factor(model, traced));
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << observed.size());
  CMatrix out(2 * d, 2 * d);
  out.block(0, 0, d, d) = model.alpha_plus() * branch_operator(model, +1, +1, observed);
  out.block(d, d, d, d) = model.alpha_minus() * branch_operator(model, -1, -1, observed);
  const CMatrix off = coherence * branch_operator(model, +1, -1, observed);
  out.block(0, d, d, d) = off;
  out.block(d, 0, d, d) = off.adjoint();
  return DensityMatrix::assume_valid(std::move(out), Dims(observed.size() + 1, 2));
}

DensityMatrix brute_force_evolution(const SpinSpinModel& model) {
  model.validate();
  const std::size_t n = model.environments();
  if (n + 1 > kMaxBruteForceSpins)
    throw DimensionGuardError(std::size_t{1} << std::min<std::size_t>(n + 1, 63), std::size_t{1} << kMaxBruteForceSpins,
                              "brute_force_evolution");

  CMatrix rho = model.system_state;
  const CMatrix rho0 = env_initial_state(model);
  for (std::size_t k = 0; k < n; ++k) rho = kron(rho, rho0);

  // Diagonal of U = exp(-i t H), H = (1/2) sigma_z x sum_k g_k sigma_z^(k).
  const auto d = rho.rows();
  CVector phase(d);
  for (Eigen::Index idx = 0; idx < d; ++idx) {
    const auto bits = static_cast<std::size_t>(idx);
    const double m = (bits >> n) & 1U ? -1.0 : 1.0;
    double field = 0.0;
    for (std::size_t k = 0; k < n; ++k) field += model.couplings[k] * (((bits >> (n - 1 - k)) & 1U) ? -1.0 : 1.0);
    phase(idx) = std::polar(1.0, -0.5 * model.time * m * field);
  }
  const CMatrix evolved = phase.asDiagonal() * rho * phase.conjugate().asDiagonal();
  return DensityMatrix::assume_valid(0.5 * (evolved + evolved.adjoint()), Dims(n + 1, 2));
}

cplx decoherence_factor(const SpinSpinModel& model, const IndexSet& traced) {
  check_env_indices(model, traced, "decoherence_factor");
  const double z = (2.0 * model.env_lambda - 1.0) * std::cos(model.euler.beta);
  cplx gamma{1.0, 0.0};
  for (auto k : traced) {
    const double x = model.couplings[k] * model.time;
    gamma *= cplx(std::cos(x), z * std::sin(x));
  }
  return gamma;
}

double branch_fidelity(const SpinSpinModel& model, std::size_t k) {
  if (k >= model.environments()) throw InvalidArgument("branch_fidelity: environment index out of range");
  const double r = 2.0 * model.env_lambda - 1.0;
  const double s = std::sin(model.euler.beta) * std::sin(model.couplings[k] * model.time);
  return std::sqrt(std::max(0.0, 1.0 - r * r * s * s));
}

double macrofraction_fidelity(const SpinSpinModel& model, const IndexSet& mac) {
  if (mac.empty()) throw InvalidArgument("macrofraction_fidelity: empty macrofraction");
  double f = 1.0;
  for (auto k : mac) f *= branch_fidelity(model, k);
  return f;
}

void validate_macrofractions(const IndexSet& observed, const std::vector<IndexSet>& macrofractions) {
  IndexSet all;
  for (const auto& mac : macrofractions) {
    if (mac.empty()) throw InvalidArgument("macrofractions: empty macrofraction");
    all.insert(all.end(), mac.begin(), mac.end());
  }
  std::sort(all.begin(), all.end());
  IndexSet sorted = observed;
  std::sort(sorted.begin(), sorted.end());
  if (all != sorted) throw InvalidArgument("macrofractions must partition the observed fraction");
}

double sbs_bound(const SpinSpinModel& model, const IndexSet& observed, const std::vector<IndexSet>& macrofractions) {
  check_env_indices(model, observed, "sbs_bound");
  validate_macrofractions(observed, macrofractions);
  const IndexSet traced = complement(model.environments(), observed);
  double fid = 0.0;
  for (const auto& mac : macrofractions) fid += macrofraction_fidelity(model, mac);
  const double coherence = 2.0 * std::abs(model.alpha_coherence()) * std::abs(decoherence_factor(model, traced));
  return coherence + 2.0 * std::sqrt(model.alpha_plus() * model.alpha_minus()) * fid;
}

DensityMatrix candidate_sbs_state(const SpinSpinModel& model, const IndexSet& observed,
                                  const std::vector<IndexSet>& macrofractions) {
  model.validate();
  check_env_indices(model, observed, "candidate_sbs_state");
  validate_macrofractions(observed, macrofractions);
  if (observed.size() > kMaxObservedSpins)
    throw DimensionGuardError(std::size_t{1} << (observed.size() + 1), std::size_t{1} << (kMaxObservedSpins + 1),
                              "candidate_sbs_state");

  const double ap = model.alpha_plus(), am = model.alpha_minus();
  CMatrix plus = CMatrix::Identity(1, 1), minus = CMatrix::Identity(1, 1);
  IndexSet concat;
  for (const auto& mac : macrofractions) {
    const CMatrix rp = branch_operator(model, +1, +1, mac);
    const CMatrix rm = branch_operator(model, -1, -1, mac);
    const Spectrum helstrom = eig_hermitian(CMatrix(ap * rp - am * rm));
    // Positive eigenspace of the Helstrom operator, kept to between 1 and d-1
    // directions so that both branches own part of the space.
    const Eigen::Index d = helstrom.eigenvalues.size();
    Eigen::Index positive = 0;
    while (positive < d && helstrom.eigenvalues(positive) > 0.0) ++positive;
    positive = std::clamp<Eigen::Index>(positive, 1, d - 1);
    const CMatrix top = helstrom.eigenvectors.leftCols(positive);
    const CMatrix pp = top * top.adjoint();
    const CMatrix pm = CMatrix::Identity(rp.rows(), rp.cols()) - pp;
    auto condition = [](const CMatrix& p, const CMatrix& r) {
      const CMatrix c = p * r * p;
      const double t = c.trace().real();
      if (t <= 0.0) throw NumericalError("candidate_sbs_state: branch has no weight on its Helstrom support");
      return CMatrix(c / t);
    };
    plus = kron(plus, condition(pp, rp));
    minus = kron(minus, condition(pm, rm));
    concat.insert(concat.end(), mac.begin(), mac.end());
  }

  const auto d = plus.rows();
  CMatrix out = CMatrix::Zero(2 * d, 2 * d);
  out.block(0, 0, d, d) = ap * plus;
  out.block(d, d, d, d) = am * minus;
  const DensityMatrix grouped = DensityMatrix::assume_valid(0.5 * (out + out.adjoint()), Dims(observed.size() + 1, 2));

  IndexSet sorted = observed;
  std::sort(sorted.begin(), sorted.end());
  IndexSet order{0};
  for (auto k : sorted)
    order.push_back(1 + static_cast<std::size_t>(std::find(concat.begin(), concat.end(), k) - concat.begin()));
  return permute_subsystems(grouped, order);
}

double dephased_system_entropy(const SpinSpinModel& model, cplx gamma) {
  const double ap = model.alpha_plus(), am = model.alpha_minus();
  const double c = std::abs(model.alpha_coherence() * gamma);
  const double lam = 0.5 * (ap + am + std::sqrt((ap - am) * (ap - am) + 4.0 * c * c));
  return binary_entropy(std::clamp(lam, 0.0, 1.0));
}

namespace {

FractionResult fraction_terms(const SpinSpinModel& model, const IndexSet& observed,
                              const std::vector<IndexSet>& macrofractions) {
  model.validate();
  check_env_indices(model, observed, "fraction");
  std::vector<IndexSet> macs = macrofractions;
  if (macs.empty() && !observed.empty()) macs.push_back(observed);
  const IndexSet traced = complement(model.environments(), observed);

  FractionResult r;
  r.f = static_cast<double>(observed.size()) / static_cast<double>(model.environments());
  IndexSet all(model.environments());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  r.H_S = dephased_system_entropy(model, decoherence_factor(model, all));
  r.gamma_abs = std::abs(decoherence_factor(model, traced));
  for (const auto& mac : macs) r.fid_mac += macrofraction_fidelity(model, mac);
  r.epsilon = sbs_bound(model, observed, macs);
  return r;
}

}  // namespace

FractionResult mutual_information_SfE(const SpinSpinModel& model, const IndexSet& observed,
                                      const std::vector<IndexSet>& macrofractions) {
  FractionResult r = fraction_terms(model, observed, macrofractions);
  const IndexSet traced = complement(model.environments(), observed);
  const double h_sfe = static_cast<double>(observed.size()) * binary_entropy(model.env_lambda) +
                       dephased_system_entropy(model, decoherence_factor(model, traced));
  const double h_fe = environment_fraction_entropy(model, observed);
  r.I_SfE = r.H_S + h_fe - h_sfe;
  return r;
}

FractionResult sbs_bound_fraction(const SpinSpinModel& model, const IndexSet& observed,
                                  const std::vector<IndexSet>& macrofractions) {
  return fraction_terms(model, observed, macrofractions);
}

}  // namespace qobj
