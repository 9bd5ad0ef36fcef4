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

#include "qobj/sbs.hpp"

namespace qobj {
namespace {

// Branch states are compared through reductions whose trace is only
// approximately one after normalization.
constexpr double kBlockTol = 1e-8;

CMatrix projector(const CMatrix& basis, Eigen::Index i) { return basis.col(i) * basis.col(i).adjoint(); }

DensityMatrix normalized(const CMatrix& block, double weight, const Dims& dims) {
  CMatrix m = block / weight;
  return DensityMatrix::assume_valid(0.5 * (m + m.adjoint()), dims, kBlockTol);
}

// Rho with S moved to the front, split into d_S x d_S blocks over the rest.
struct PointerBlocks {
  std::vector<std::vector<CMatrix>> blocks;
  Dims env_dims;
  IndexSet env_indices;
};

PointerBlocks pointer_blocks(const DensityMatrix& rho, std::size_t s, const CMatrix& basis) {
  IndexSet order{s};
  PointerBlocks out;
  out.env_indices = complement(rho.subsystems(), {s});
  for (auto i : out.env_indices) {
    order.push_back(i);
    out.env_dims.push_back(rho.dim_of(i));
  }
  const CMatrix front = permute_subsystems(rho, order).matrix();
  const auto ds = static_cast<Eigen::Index>(rho.dim_of(s));
  const auto de = static_cast<Eigen::Index>(rho.dim()) / ds;
  const auto k = basis.cols();
  out.blocks.assign(static_cast<std::size_t>(k), std::vector<CMatrix>(static_cast<std::size_t>(k)));
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      CMatrix b = CMatrix::Zero(de, de);
      for (Eigen::Index a = 0; a < ds; ++a)
        for (Eigen::Index c = 0; c < ds; ++c) {
          const cplx w = std::conj(basis(a, i)) * basis(c, j);
          if (w == cplx(0.0, 0.0)) continue;
          b += w * front.block(a * de, c * de, de, de);
        }
      out.blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(b);
    }
  }
  return out;
}

CMatrix random_hermitian(Eigen::Index d, std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> normal;
  CMatrix g(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) g(i, j) = cplx(normal(rng), normal(rng));
  return g + g.adjoint();
}

// Eigenbasis of rho_S. Degenerate (nonzero) eigenvalue clusters are split by
// the correlations with a generic environment observable O, i.e. by
// diagonalizing tr_E[(1 x O) rho] inside the cluster.
CMatrix pointer_eigenbasis(const DensityMatrix& rho, std::size_t s, const SbsCheckOptions& opt, bool& degenerate) {
  const Spectrum spec = eig_hermitian(partial_trace(rho, {s}));
  const auto d = spec.eigenvalues.size();
  CMatrix basis = spec.eigenvectors;
  degenerate = false;

  std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
  for (Eigen::Index start = 0; start < d;) {
    Eigen::Index end = start + 1;
    while (end < d && spec.eigenvalues(end - 1) - spec.eigenvalues(end) < opt.degeneracy_gap) ++end;
    if (end - start > 1 && spec.eigenvalues(start) > opt.tolerance) clusters.emplace_back(start, end);
    start = end;
  }
  if (clusters.empty()) return basis;
  degenerate = true;

  const PointerBlocks pb = pointer_blocks(rho, s, CMatrix::Identity(static_cast<Eigen::Index>(rho.dim_of(s)),
                                                                    static_cast<Eigen::Index>(rho.dim_of(s))));
  const CMatrix o = random_hermitian(pb.blocks[0][0].rows(), opt.seed);
  const auto ds = static_cast<Eigen::Index>(rho.dim_of(s));
  CMatrix corr(ds, ds);
  for (Eigen::Index a = 0; a < ds; ++a)
    for (Eigen::Index b = 0; b < ds; ++b)
      corr(a, b) = (o * pb.blocks[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]).trace();
  corr = 0.5 * (corr + corr.adjoint());

  for (auto [start, end] : clusters) {
    const CMatrix w = basis.middleCols(start, end - start);
    const Spectrum sub = eig_hermitian(CMatrix(w.adjoint() * corr * w));
    const double scale = std::max(1.0, sub.eigenvalues.cwiseAbs().maxCoeff());
    for (Eigen::Index i = 1; i < sub.eigenvalues.size(); ++i) {
      const double gap = sub.eigenvalues(i - 1) - sub.eigenvalues(i);
      if (gap < opt.degeneracy_gap * scale) {
        throw InvariantError("pointer_basis", gap,
                             "degenerate system spectrum not resolved by system-environment correlations");
      }
    }
    basis.middleCols(start, end - start) = w * sub.eigenvectors;
  }
  return basis;
}

}  // namespace

Dims SbsSpec::environment_dims() const {
  if (branches.empty() || branches.front().empty()) return {};
  Dims dims;
  for (const auto& b : branches.front())
    for (auto d : b.dims()) dims.push_back(d);
  return dims;
}

void SbsSpec::validate() const {
  const std::size_t n = pointer_probs.size();
  if (n == 0) throw InvalidArgument("SbsSpec: no branches");
  double total = 0.0;
  for (double p : pointer_probs) {
    if (!(p >= -tol)) throw InvariantError("probabilities", -p, "negative pointer probability");
    total += p;
  }
  if (std::abs(total - 1.0) > tol) throw InvariantError("probabilities", std::abs(total - 1.0), "sum differs from one");

  if (pointer_basis.cols() != static_cast<Eigen::Index>(n) || pointer_basis.rows() < 2 ||
      pointer_basis.rows() < pointer_basis.cols()) {
    throw InvalidArgument("SbsSpec: pointer basis must have one column per probability and at least two rows");
  }
  const double ortho =
      (pointer_basis.adjoint() * pointer_basis - CMatrix::Identity(pointer_basis.cols(), pointer_basis.cols()))
          .cwiseAbs()
          .maxCoeff();
  if (ortho > tol) throw InvariantError("orthonormal", ortho, "pointer basis");

  if (branches.size() != n) throw InvalidArgument("SbsSpec: one branch list per pointer state required");
  const Dims env = environment_dims();
  for (const auto& list : branches) {
    if (list.empty()) throw InvalidArgument("SbsSpec: empty branch");
    if (joint && list.size() != 1) throw InvalidArgument("SbsSpec: joint branches hold exactly one state");
    Dims dims;
    for (const auto& b : list)
      for (auto d : b.dims()) dims.push_back(d);
    if (dims != env) throw InvalidArgument("SbsSpec: branch dimensions differ between pointer states");
  }

  // Single-subenvironment reductions of every branch.
  std::vector<std::vector<DensityMatrix>> reduced(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (joint) {
      const auto& b = branches[i].front();
      for (std::size_t k = 0; k < b.subsystems(); ++k) reduced[i].push_back(partial_trace(b, {k}));
    } else {
      reduced[i] = branches[i];
    }
  }
  for (std::size_t k = 0; k < reduced.front().size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double f = fidelity(reduced[i][k], reduced[j][k]);
        if (f > tol) throw InvariantError("branch_overlap", f, "branches share support on a subenvironment");
      }
}

DensityMatrix build_sbs(const SbsSpec& spec) {
  spec.validate();
  const Dims env = spec.environment_dims();
  Dims dims{static_cast<std::size_t>(spec.pointer_basis.rows())};
  dims.insert(dims.end(), env.begin(), env.end());
  const std::size_t total = total_dimension(dims);
  if (total > kMaxTotalDim) throw DimensionGuardError(total, kMaxTotalDim, "build_sbs");

  const auto d = static_cast<Eigen::Index>(total);
  CMatrix out = CMatrix::Zero(d, d);
  for (std::size_t i = 0; i < spec.pointer_probs.size(); ++i) {
    const DensityMatrix branch = spec.joint ? spec.branches[i].front() : tensor(spec.branches[i]);
    out += spec.pointer_probs[i] * kron(projector(spec.pointer_basis, static_cast<Eigen::Index>(i)), branch.matrix());
  }
  return DensityMatrix::assume_valid(0.5 * (out + out.adjoint()), std::move(dims), spec.tol);
}

Measurement discrimination_measurement(const std::vector<CMatrix>& weighted_branches) {
  if (weighted_branches.size() < 2) throw InvalidArgument("discrimination_measurement: need two branches");
  const auto d = weighted_branches.front().rows();
  CMatrix mix = CMatrix::Zero(d, d);
  for (std::size_t i = 0; i < weighted_branches.size(); ++i)
    mix += static_cast<double>(i + 1) * weighted_branches[i];
  const Spectrum spec = eig_hermitian(CMatrix(0.5 * (mix + mix.adjoint())));

  Measurement m;
  m.kind = MeasurementKind::projective;
  m.elements.assign(weighted_branches.size(), CMatrix::Zero(d, d));
  for (Eigen::Index c = 0; c < d; ++c) {
    const CVector v = spec.eigenvectors.col(c);
    std::size_t best = 0;
    double best_weight = -1.0;
    for (std::size_t i = 0; i < weighted_branches.size(); ++i) {
      const double w = (v.adjoint() * weighted_branches[i] * v)(0, 0).real();
      if (w > best_weight) {
        best_weight = w;
        best = i;
      }
    }
    m.elements[best] += v * v.adjoint();
  }
  return m;
}

SbsReport check_sbs(const DensityMatrix& rho, std::size_t system_index, const SbsCheckOptions& options) {
  if (system_index >= rho.subsystems()) throw InvalidArgument("check_sbs: system index out of range");
  if (rho.subsystems() < 2) throw InvalidArgument("check_sbs: state has no environment");

  SbsReport report;
  report.tolerance = options.tolerance;
  const auto ds = static_cast<Eigen::Index>(rho.dim_of(system_index));
  if (options.pointer_basis) {
    const CMatrix& b = *options.pointer_basis;
    if (b.rows() != ds || b.cols() != ds) throw InvalidArgument("check_sbs: pointer basis must be d_S x d_S");
    const double err = (b.adjoint() * b - CMatrix::Identity(ds, ds)).cwiseAbs().maxCoeff();
    if (err > 1e-9) throw InvariantError("orthonormal", err, "caller pointer basis");
    report.pointer_basis = b;
    report.pointer_override = true;
  } else {
    report.pointer_basis = pointer_eigenbasis(rho, system_index, options, report.pointer_degenerate);
  }

  const PointerBlocks pb = pointer_blocks(rho, system_index, report.pointer_basis);
  const auto n = static_cast<std::size_t>(ds);
  const std::size_t n_env = pb.env_dims.size();
  for (std::size_t i = 0; i < n; ++i) report.pointer_probs.push_back(std::max(0.0, pb.blocks[i][i].trace().real()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) report.coherence_norm += trace_norm(pb.blocks[i][j]);

  // weighted[k][i] = p_i rho_i^k
  std::vector<std::vector<CMatrix>> weighted(n_env, std::vector<CMatrix>(n));
  std::vector<std::vector<std::optional<DensityMatrix>>> branch(n_env, std::vector<std::optional<DensityMatrix>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double p = report.pointer_probs[i];
    for (std::size_t k = 0; k < n_env; ++k) {
      const auto dk = static_cast<Eigen::Index>(pb.env_dims[k]);
      if (p <= options.tolerance) {
        weighted[k][i] = CMatrix::Zero(dk, dk);
        continue;
      }
      const DensityMatrix joint = normalized(pb.blocks[i][i], p, pb.env_dims);
      DensityMatrix rk = n_env == 1 ? joint : partial_trace(joint, {k});
      weighted[k][i] = p * rk.matrix();
      branch[k][i] = std::move(rk);
    }
  }

  report.pair_fidelity = Eigen::MatrixXd::Zero(ds, ds);
  double fid_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double pair_sum = 0.0, pair_max = 0.0;
      for (std::size_t k = 0; k < n_env; ++k) {
        if (!branch[k][i] || !branch[k][j]) continue;
        // F(p_i rho_i, p_j rho_j) on the unnormalized blocks: dividing by a
        // small p first would lift roundoff above the sqrt_psd cut.
        const double weight = std::sqrt(report.pointer_probs[i] * report.pointer_probs[j]);
        const double f = std::clamp(
            trace_norm(CMatrix(sqrt_psd(weighted[k][i]) * sqrt_psd(weighted[k][j]))) / weight, 0.0, 1.0);
        pair_sum += f;
        pair_max = std::max(pair_max, f);
      }
      const auto ii = static_cast<Eigen::Index>(i), jj = static_cast<Eigen::Index>(j);
      report.pair_fidelity(ii, jj) = report.pair_fidelity(jj, ii) = pair_max;
      report.branch_fidelities = std::max(report.branch_fidelities, pair_max);
      fid_sum += 2.0 * std::sqrt(report.pointer_probs[i] * report.pointer_probs[j]) * pair_sum;
    }
  report.epsilon_bound = report.coherence_norm + fid_sum;
  report.is_sbs = report.coherence_norm <= options.tolerance && report.branch_fidelities <= options.tolerance;

  if (options.with_measurements) {
    MeasurementMap ms;
    ms.emplace(system_index, Measurement::from_basis(report.pointer_basis));
    for (std::size_t k = 0; k < n_env; ++k) ms.emplace(pb.env_indices[k], discrimination_measurement(weighted[k]));
    report.disagreement_mass = agreement_distribution(rho, system_index, ms, pb.env_indices).disagreement_mass();
    report.bohr_nondisturbance_residual = bohr_nondisturbance_residual(rho, ms);
    report.agreement_ok = report.disagreement_mass <= options.tolerance;
  }
  return report;
}

double bohr_nondisturbance_residual(const DensityMatrix& rho, const MeasurementMap& measurements) {
  DensityMatrix dephased = rho;
  for (const auto& [subsystem, m] : measurements) {
    if (m.kind == MeasurementKind::povm) throw InvalidArgument("bohr_nondisturbance_residual: projective measurements only");
    dephased = apply_measurement_channel(dephased, subsystem, m);
  }
  return trace_distance(rho, dephased);
}

double JointDistribution::probability(std::span<const std::size_t> outcome) const {
  if (outcome.size() != outcomes.size()) throw InvalidArgument("JointDistribution: outcome arity mismatch");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    if (outcome[i] >= outcomes[i]) throw InvalidArgument("JointDistribution: outcome out of range");
    flat = flat * outcomes[i] + outcome[i];
  }
  return probs[flat];
}

double JointDistribution::disagreement_mass() const {
  double mass = 0.0;
  std::vector<std::size_t> digits(outcomes.size());
  for (std::size_t flat = 0; flat < probs.size(); ++flat) {
    std::size_t rest = flat;
    for (std::size_t i = outcomes.size(); i-- > 0;) {
      digits[i] = rest % outcomes[i];
      rest /= outcomes[i];
    }
    if (std::adjacent_find(digits.begin(), digits.end(), std::not_equal_to<>()) != digits.end()) mass += probs[flat];
  }
  return mass;
}

JointDistribution agreement_distribution(const DensityMatrix& rho, std::size_t system_index,
                                         const MeasurementMap& measurements, const IndexSet& subset) {
  JointDistribution out;
  out.parties = subset;
  out.parties.push_back(system_index);
  std::sort(out.parties.begin(), out.parties.end());
  if (std::adjacent_find(out.parties.begin(), out.parties.end()) != out.parties.end())
    throw InvalidArgument("agreement_distribution: repeated subsystem");

  DensityMatrix state = rho;
  for (auto party : out.parties) {
    if (party >= rho.subsystems()) throw InvalidArgument("agreement_distribution: subsystem out of range");
    const auto it = measurements.find(party);
    if (it == measurements.end()) throw InvalidArgument("agreement_distribution: missing measurement");
    if (it->second.kind == MeasurementKind::povm)
      throw InvalidArgument("agreement_distribution: projective measurements only");
    state = measure_subsystem(state, party, it->second);
    out.outcomes.push_back(it->second.outcomes());
  }
  const DensityMatrix registers = partial_trace(state, out.parties);
  const auto diag = registers.matrix().diagonal().real();
  out.probs.resize(static_cast<std::size_t>(diag.size()));
  for (Eigen::Index i = 0; i < diag.size(); ++i) out.probs[static_cast<std::size_t>(i)] = std::max(0.0, diag(i));
  return out;
}

}  // namespace qobj
