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
#include <numeric>
#include <random>

#include "qobj/sbs.hpp"

namespace qobj {
namespace {

// Probabilities from normalized exponentials, redrawn until sorted values are
// at least `gap` apart so the pointer basis is unambiguous.
std::vector<double> random_probabilities(std::size_t n, double gap, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> p(n);
    for (auto& v : p) v = expo(rng);
    const double sum = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& v : p) v /= sum;
    std::vector<double> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    bool ok = sorted.front() >= gap;
    for (std::size_t i = 1; i < n && ok; ++i) ok = sorted[i] - sorted[i - 1] >= gap;
    if (ok) return p;
  }
  throw InvalidArgument("random_sbs_spec: min_prob_gap too large for the branch count");
}

// Splits 0..d-1 into `parts` nonempty groups of consecutive indices.
std::vector<std::pair<std::size_t, std::size_t>> random_groups(std::size_t d, std::size_t parts, Rng& rng) {
  std::vector<std::size_t> cuts(d - 1);
  std::iota(cuts.begin(), cuts.end(), 1);
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(parts - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  std::size_t start = 0;
  for (auto c : cuts) {
    groups.emplace_back(start, c - start);
    start = c;
  }
  groups.emplace_back(start, d - start);
  return groups;
}

// Random state supported on span(columns of `basis`).
CMatrix random_state_on(const CMatrix& basis, Rng& rng) {
  const auto r = static_cast<std::size_t>(basis.cols());
  const CMatrix inner = r == 1 ? CMatrix::Identity(1, 1) : random_density_matrix({r}, rng).matrix();
  return basis * inner * basis.adjoint();
}

}  // namespace

SbsSpec random_sbs_spec(const SbsGenOptions& o, Rng& rng) {
  if (o.system_dim < 2 || o.max_env_dim < o.system_dim || o.environments == 0)
    throw InvalidArgument("random_sbs_spec: need system_dim >= 2, max_env_dim >= system_dim and an environment");
  const std::size_t n = o.system_dim;

  SbsSpec spec;
  spec.joint = o.joint;
  spec.pointer_probs = random_probabilities(n, o.min_prob_gap, rng);
  spec.pointer_basis = random_unitary(n, rng);

  std::uniform_int_distribution<std::size_t> dim_dist(o.system_dim, o.max_env_dim);
  Dims env_dims;
  // support[k][i]: orthonormal columns spanning branch i on subenvironment k.
  std::vector<std::vector<CMatrix>> support;
  for (std::size_t k = 0; k < o.environments; ++k) {
    const std::size_t d = dim_dist(rng);
    env_dims.push_back(d);
    const CMatrix u = random_unitary(d, rng);
    std::vector<CMatrix> cols;
    for (auto [start, len] : random_groups(d, n, rng))
      cols.push_back(u.middleCols(static_cast<Eigen::Index>(start), static_cast<Eigen::Index>(len)));
    support.push_back(std::move(cols));
  }

  spec.branches.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!o.joint) {
      for (std::size_t k = 0; k < o.environments; ++k)
        spec.branches[i].push_back(DensityMatrix::assume_valid(random_state_on(support[k][i], rng), {env_dims[k]}));
      continue;
    }
    // Correlated state on the product of the per-environment supports.
    CMatrix basis = support[0][i];
    for (std::size_t k = 1; k < o.environments; ++k) basis = kron(basis, support[k][i]);
    spec.branches[i].push_back(DensityMatrix::assume_valid(random_state_on(basis, rng), env_dims));
  }
  return spec;
}

DensityMatrix random_classical_classical(std::size_t da, std::size_t db, Rng& rng) {
  const CMatrix ua = random_unitary(da, rng), ub = random_unitary(db, rng);
  const DensityMatrix joint = random_density_matrix({da * db}, rng);
  const auto d = static_cast<Eigen::Index>(da * db);
  CMatrix out = CMatrix::Zero(d, d);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t b = 0; b < db; ++b) {
      const auto idx = static_cast<Eigen::Index>(a * db + b);
      const double p = joint.matrix()(idx, idx).real();
      out += p * kron(ua.col(static_cast<Eigen::Index>(a)) * ua.col(static_cast<Eigen::Index>(a)).adjoint(),
                      ub.col(static_cast<Eigen::Index>(b)) * ub.col(static_cast<Eigen::Index>(b)).adjoint());
    }
  return DensityMatrix::assume_valid(0.5 * (out + out.adjoint()), {da, db});
}

DensityMatrix random_classical_quantum(std::size_t da, std::size_t db, Rng& rng) {
  const CMatrix ub = random_unitary(db, rng);
  const std::vector<double> p = random_probabilities(db, 0.0, rng);
  const auto d = static_cast<Eigen::Index>(da * db);
  CMatrix out = CMatrix::Zero(d, d);
  for (std::size_t b = 0; b < db; ++b) {
    const DensityMatrix rho_a = random_density_matrix({da}, rng);
    out += p[b] * kron(rho_a.matrix(), ub.col(static_cast<Eigen::Index>(b)) * ub.col(static_cast<Eigen::Index>(b)).adjoint());
  }
  return DensityMatrix::assume_valid(0.5 * (out + out.adjoint()), {da, db});
}

}  // namespace qobj
