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

#include "optimizer.hpp"
#include "qobj/info_measures.hpp"

namespace qobj {
namespace {

void require_disjoint_cover(std::size_t n, std::initializer_list<const IndexSet*> parts, bool allow_empty_last) {
  std::vector<int> seen(n, 0);
  std::size_t idx = 0;
  for (const IndexSet* part : parts) {
    const bool last = idx++ == parts.size() - 1;
    if (part->empty() && !(allow_empty_last && last)) throw InvalidArgument("empty part in partition");
    for (auto i : *part) {
      if (i >= n) throw InvalidArgument("partition index out of range");
      if (seen[i]++) throw InvalidArgument("parts overlap");
    }
  }
  for (int s : seen)
    if (s == 0) throw InvalidArgument("parts do not cover every subsystem");
}

IndexSet join(const IndexSet& a, const IndexSet& b) {
  IndexSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

double entropy_of(const DensityMatrix& rho, const IndexSet& keep) {
  if (keep.empty()) return 0.0;
  return von_neumann_entropy(partial_trace(rho, keep));
}

// Unnormalized contribution -tr(X log X) + p log p, i.e. p * H(X / p).
double weighted_entropy(const CMatrix& unnormalized, double tol) {
  const Spectrum s = eig_hermitian(unnormalized);
  double p = 0.0;
  double h = 0.0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double lambda = s.eigenvalues(i);
    if (lambda < -tol) throw InvariantError("psd", -lambda, "conditional state");
    if (lambda > 0.0) {
      h -= lambda * std::log2(lambda);
      p += lambda;
    }
  }
  if (p > 0.0) h += p * std::log2(p);
  return h;
}

// rho with subsystem s moved to the front, cut into d_s x d_s blocks on the rest.
struct Blocks {
  std::size_t ds = 0;
  Eigen::Index dr = 0;
  std::vector<CMatrix> b;  // row-major ds*ds
  const CMatrix& at(std::size_t i, std::size_t j) const { return b[i * ds + j]; }
};

Blocks split_blocks(const DensityMatrix& rho, std::size_t s) {
  IndexSet order{s};
  for (auto i : complement(rho.subsystems(), {s})) order.push_back(i);
  const DensityMatrix front = permute_subsystems(rho, order);
  Blocks out;
  out.ds = rho.dim_of(s);
  out.dr = static_cast<Eigen::Index>(rho.dim() / out.ds);
  for (std::size_t i = 0; i < out.ds; ++i)
    for (std::size_t j = 0; j < out.ds; ++j)
      out.b.push_back(front.matrix().block(static_cast<Eigen::Index>(i) * out.dr,
                                           static_cast<Eigen::Index>(j) * out.dr, out.dr, out.dr));
  return out;
}

CMatrix conditional_block(const Blocks& blocks, const CMatrix& element) {
  CMatrix cond = CMatrix::Zero(blocks.dr, blocks.dr);
  for (std::size_t a = 0; a < blocks.ds; ++a)
    for (std::size_t b = 0; b < blocks.ds; ++b) {
      const cplx w = element(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a));
      if (w != cplx(0.0, 0.0)) cond += w * blocks.at(a, b);
    }
  return 0.5 * (cond + cond.adjoint());
}

// sum_i p_i H(rho_E|i) for a measurement on the block index.
double average_conditional_entropy(const Blocks& blocks, const Measurement& m, double tol) {
  double acc = 0.0;
  for (const auto& e : m.elements) acc += weighted_entropy(conditional_block(blocks, e), tol);
  return acc;
}

void require_qubit(const DensityMatrix& rho, std::size_t s, const char* op) {
  if (s >= rho.subsystems()) throw InvalidArgument(std::string(op) + ": subsystem out of range");
  if (rho.dim_of(s) != 2) {
    throw InvalidArgument(std::string(op) +
                          ": measurement optimization needs a qubit; pass an explicit basis override");
  }
}

void check_override(const DensityMatrix& rho, std::size_t s, const Measurement& m) {
  if (s >= rho.subsystems()) throw InvalidArgument("basis override: subsystem out of range");
  if (m.dim() != rho.dim_of(s)) throw InvalidArgument("basis override: dimension mismatch");
  m.validate();
}

}  // namespace

void OptimizerConfig::validate() const {
  if (grid_points < 8) throw InvalidArgument("OptimizerConfig: grid_points must be >= 8");
  if (refine_iters < 0) throw InvalidArgument("OptimizerConfig: refine_iters must be >= 0");
}

double mutual_information(const DensityMatrix& rho, const IndexSet& a, const IndexSet& b) {
  require_disjoint_cover(rho.subsystems(), {&a, &b}, false);
  return entropy_of(rho, a) + entropy_of(rho, b) - von_neumann_entropy(rho);
}

double conditional_mutual_information(const DensityMatrix& rho, const IndexSet& a, const IndexSet& b,
                                      const IndexSet& c) {
  require_disjoint_cover(rho.subsystems(), {&a, &b, &c}, true);
  return entropy_of(rho, join(a, c)) + entropy_of(rho, join(b, c)) - entropy_of(rho, c) -
         von_neumann_entropy(rho);
}

double conditional_entropy(const DensityMatrix& rho, const IndexSet& x, const IndexSet& y) {
  return entropy_of(rho, join(x, y)) - entropy_of(rho, y);
}

double multipartite_cmi(const DensityMatrix& rho, std::size_t system_index) {
  if (system_index >= rho.subsystems()) throw InvalidArgument("multipartite_cmi: system out of range");
  const IndexSet envs = complement(rho.subsystems(), {system_index});
  if (envs.size() < 2) throw InvalidArgument("multipartite_cmi: needs at least two environments");
  const IndexSet s{system_index};
  double sum = 0.0;
  for (auto k : envs) sum += conditional_entropy(rho, {k}, s);
  return sum - conditional_entropy(rho, envs, s);
}

double classical_mutual_information(const Eigen::MatrixXd& joint) {
  std::vector<double> pa(static_cast<std::size_t>(joint.rows()), 0.0);
  std::vector<double> pb(static_cast<std::size_t>(joint.cols()), 0.0);
  std::vector<double> pab;
  for (Eigen::Index i = 0; i < joint.rows(); ++i)
    for (Eigen::Index j = 0; j < joint.cols(); ++j) {
      const double p = std::max(joint(i, j), 0.0);
      pa[static_cast<std::size_t>(i)] += p;
      pb[static_cast<std::size_t>(j)] += p;
      pab.push_back(p);
    }
  return shannon_entropy(pa) + shannon_entropy(pb) - shannon_entropy(pab);
}

OptimizedValue holevo_quantity(const DensityMatrix& rho, std::size_t system_index, const OptimizerConfig& cfg,
                               const std::optional<Measurement>& basis_override) {
  if (rho.subsystems() < 2) throw InvalidArgument("holevo_quantity: needs an environment");
  const Blocks blocks = split_blocks(rho, system_index);
  const double h_env = entropy_of(rho, complement(rho.subsystems(), {system_index}));
  OptimizedValue out;
  if (basis_override) {
    check_override(rho, system_index, *basis_override);
    out.value = h_env - average_conditional_entropy(blocks, *basis_override, rho.tol());
    out.argmax = {*basis_override};
    out.evaluations = 1;
    out.optimized = false;
    out.converged = true;
    return out;
  }
  require_qubit(rho, system_index, "holevo_quantity");
  const auto result = detail::maximize_on_sphere(
      [&](const detail::Direction& n) {
        return h_env - average_conditional_entropy(blocks, Measurement::qubit(n), rho.tol());
      },
      cfg);
  out.value = result.value;
  out.argmax = {Measurement::qubit(result.best)};
  out.evaluations = result.evaluations;
  out.converged = result.converged;
  return out;
}

OptimizedValue discord_one_sided(const DensityMatrix& rho, std::size_t measured_side, const OptimizerConfig& cfg,
                                 const std::optional<Measurement>& basis_override) {
  const IndexSet rest = complement(rho.subsystems(), {measured_side});
  const double total = mutual_information(rho, {measured_side}, rest);
  OptimizedValue chi = holevo_quantity(rho, measured_side, cfg, basis_override);
  chi.value = total - chi.value;
  return chi;
}

OptimizedValue discord_two_sided(const DensityMatrix& rho, const OptimizerConfig& cfg) {
  if (rho.subsystems() != 2 || rho.dim_of(0) != 2 || rho.dim_of(1) != 2) {
    throw InvalidArgument("discord_two_sided: grid optimizer supports two-qubit states only");
  }
  // Bloch data: p(a,b) = (1 + a n.rA + b m.rB + a b n^T T m) / 4.
  static const CMatrix id = CMatrix::Identity(2, 2);
  static const CMatrix paulis[3] = {(CMatrix(2, 2) << 0, 1, 1, 0).finished(),
                                    (CMatrix(2, 2) << 0, cplx(0, -1), cplx(0, 1), 0).finished(),
                                    (CMatrix(2, 2) << 1, 0, 0, -1).finished()};
  Eigen::Vector3d ra, rb;
  Eigen::Matrix3d corr;
  for (int mu = 0; mu < 3; ++mu) {
    ra(mu) = (rho.matrix() * kron(paulis[mu], id)).trace().real();
    rb(mu) = (rho.matrix() * kron(id, paulis[mu])).trace().real();
    for (int nu = 0; nu < 3; ++nu)
      corr(mu, nu) = (rho.matrix() * kron(paulis[mu], paulis[nu])).trace().real();
  }
  auto classical = [&](const detail::Direction& n, const detail::Direction& m) {
    const double x = n.dot(ra), y = m.dot(rb), z = n.dot(corr * m);
    Eigen::Matrix2d joint;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const double sa = a == 0 ? 1.0 : -1.0, sb = b == 0 ? 1.0 : -1.0;
        joint(a, b) = 0.25 * (1.0 + sa * x + sb * y + sa * sb * z);
      }
    return classical_mutual_information(joint);
  };
  const auto result = detail::maximize_on_sphere_pair(classical, cfg);
  OptimizedValue out;
  out.value = mutual_information(rho, {0}, {1}) - result.value;
  out.argmax = {Measurement::qubit(result.a), Measurement::qubit(result.b)};
  out.evaluations = result.evaluations;
  out.converged = result.converged;
  return out;
}

OptimizedValue accessible_information(const DensityMatrix& rho, std::size_t system_index,
                                      const OptimizerConfig& cfg,
                                      const std::optional<Measurement>& basis_override) {
  if (rho.subsystems() < 2) throw InvalidArgument("accessible_information: needs an environment");
  const IndexSet rest = complement(rho.subsystems(), {system_index});
  auto post_measurement_info = [&](const Measurement& m) {
    return mutual_information(measure_subsystem(rho, system_index, m), {system_index}, rest);
  };
  OptimizedValue out;
  if (basis_override) {
    check_override(rho, system_index, *basis_override);
    out.value = post_measurement_info(*basis_override);
    out.argmax = {*basis_override};
    out.evaluations = 1;
    out.optimized = false;
    out.converged = true;
    return out;
  }
  require_qubit(rho, system_index, "accessible_information");
  const auto result = detail::maximize_on_sphere(
      [&](const detail::Direction& n) { return post_measurement_info(Measurement::qubit(n)); }, cfg);
  out.value = result.value;
  out.argmax = {Measurement::qubit(result.best)};
  out.evaluations = result.evaluations;
  out.converged = result.converged;
  return out;
}

MeasuresReport measures_report(const DensityMatrix& rho, std::size_t system_index, const OptimizerConfig& cfg) {
  if (system_index >= rho.subsystems()) throw InvalidArgument("measures_report: system out of range");
  if (rho.subsystems() < 2) throw InvalidArgument("measures_report: needs an environment");
  MeasuresReport r;
  r.optimizer = cfg;
  const IndexSet rest = complement(rho.subsystems(), {system_index});
  r.H_S = entropy_of(rho, {system_index});
  r.I = mutual_information(rho, {system_index}, rest);
  if (rho.dim_of(system_index) == 2) {
    const auto chi = holevo_quantity(rho, system_index, cfg);
    r.chi = chi.value;
    r.chi_converged = chi.converged;
    r.discord_one_sided = r.I - chi.value;
    const auto acc = accessible_information(rho, system_index, cfg);
    r.I_acc = acc.value;
    r.I_acc_converged = acc.converged;
  }
  if (rho.subsystems() == 2 && rho.dim_of(0) == 2 && rho.dim_of(1) == 2) {
    const auto d2 = discord_two_sided(rho, cfg);
    r.discord_two_sided = d2.value;
    r.discord_two_sided_converged = d2.converged;
  }
  if (rest.size() >= 2) r.cmi_multi = multipartite_cmi(rho, system_index);
  return r;
}

}  // namespace qobj
