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
#include <limits>
#include <numeric>

#include "qobj/density_matrix.hpp"

namespace qobj {
namespace {

std::vector<std::size_t> strides_of(const Dims& dims) {
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) strides[i - 1] = strides[i] * dims[i];
  return strides;
}

// Flat offsets of every multi-index over `subset` (row-major in subset order).
std::vector<std::size_t> subset_offsets(const Dims& dims, const std::vector<std::size_t>& strides,
                                        const IndexSet& subset) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t idx : subset) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[idx]);
    for (std::size_t base : offsets) {
      for (std::size_t digit = 0; digit < dims[idx]; ++digit) next.push_back(base + digit * strides[idx]);
    }
    offsets = std::move(next);
  }
  return offsets;
}

CMatrix hermitize(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

IndexSet complement(std::size_t n, const IndexSet& set) {
  std::vector<bool> in(n, false);
  for (auto i : set) {
    if (i >= n) throw InvalidArgument("index out of range");
    in[i] = true;
  }
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b, std::size_t max_dim) {
  const std::size_t d = a.dim() * b.dim();
  if (d > max_dim) throw DimensionGuardError(d, max_dim, "tensor");
  CMatrix out = kron(a.matrix(), b.matrix());
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix::assume_valid(std::move(out), std::move(dims), std::max(a.tol(), b.tol()));
}

DensityMatrix tensor(std::span<const DensityMatrix> factors, std::size_t max_dim) {
  if (factors.empty()) throw InvalidArgument("tensor: no factors");
  DensityMatrix acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = tensor(acc, factors[i], max_dim);
  return acc;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const IndexSet& keep) {
  if (keep.empty()) throw InvalidArgument("partial_trace: empty keep set");
  const std::size_t n = rho.subsystems();
  IndexSet kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw InvalidArgument("partial_trace: duplicate index in keep set");
  }
  if (kept.back() >= n) throw InvalidArgument("partial_trace: index out of range");
  if (kept.size() == n) return rho;

  const auto strides = strides_of(rho.dims());
  const auto keep_off = subset_offsets(rho.dims(), strides, kept);
  const auto trace_off = subset_offsets(rho.dims(), strides, complement(n, kept));
  const auto dk = static_cast<Eigen::Index>(keep_off.size());
  const CMatrix& m = rho.matrix();
  CMatrix out = CMatrix::Zero(dk, dk);
  for (Eigen::Index i = 0; i < dk; ++i) {
    for (Eigen::Index j = 0; j < dk; ++j) {
      cplx acc{0.0, 0.0};
      const auto ri = keep_off[static_cast<std::size_t>(i)];
      const auto cj = keep_off[static_cast<std::size_t>(j)];
      for (std::size_t t : trace_off)
        acc += m(static_cast<Eigen::Index>(ri + t), static_cast<Eigen::Index>(cj + t));
      out(i, j) = acc;
    }
  }
  Dims dims;
  for (auto k : kept) dims.push_back(rho.dims()[k]);
  return DensityMatrix::assume_valid(hermitize(out), std::move(dims), rho.tol());
}

DensityMatrix permute_subsystems(const DensityMatrix& rho, const IndexSet& order) {
  const std::size_t n = rho.subsystems();
  if (order.size() != n) throw InvalidArgument("permute_subsystems: order must list every subsystem");
  IndexSet sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i)
    if (sorted[i] != i) throw InvalidArgument("permute_subsystems: not a permutation");

  const auto strides = strides_of(rho.dims());
  const auto off = subset_offsets(rho.dims(), strides, order);
  const auto d = static_cast<Eigen::Index>(off.size());
  CMatrix out(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j)
      out(i, j) = rho.matrix()(static_cast<Eigen::Index>(off[static_cast<std::size_t>(i)]),
                               static_cast<Eigen::Index>(off[static_cast<std::size_t>(j)]));
  Dims dims;
  for (auto k : order) dims.push_back(rho.dims()[k]);
  return DensityMatrix::assume_valid(std::move(out), std::move(dims), rho.tol());
}

DensityMatrix regroup(const DensityMatrix& rho, const std::vector<IndexSet>& groups) {
  IndexSet order;
  Dims merged;
  for (const auto& g : groups) {
    if (g.empty()) throw InvalidArgument("regroup: empty group");
    std::size_t d = 1;
    for (auto i : g) {
      if (i >= rho.subsystems()) throw InvalidArgument("regroup: index out of range");
      order.push_back(i);
      d *= rho.dims()[i];
    }
    merged.push_back(d);
  }
  DensityMatrix permuted = permute_subsystems(rho, order);
  return DensityMatrix::assume_valid(permuted.matrix(), std::move(merged), rho.tol());
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const CMatrix& unitary) {
  if (unitary.rows() != static_cast<Eigen::Index>(rho.dim()) || unitary.cols() != unitary.rows()) {
    throw InvalidArgument("apply_unitary: dimension mismatch");
  }
  return DensityMatrix::assume_valid(hermitize(unitary * rho.matrix() * unitary.adjoint()), rho.dims(),
                                     rho.tol());
}

CMatrix embed_operator(const CMatrix& op, std::size_t subsystem, const Dims& dims) {
  if (subsystem >= dims.size()) throw InvalidArgument("embed_operator: subsystem out of range");
  if (op.rows() != static_cast<Eigen::Index>(dims[subsystem]) || op.cols() != op.rows()) {
    throw InvalidArgument("embed_operator: operator dimension mismatch");
  }
  std::size_t left = 1, right = 1;
  for (std::size_t i = 0; i < subsystem; ++i) left *= dims[i];
  for (std::size_t i = subsystem + 1; i < dims.size(); ++i) right *= dims[i];
  const auto l = static_cast<Eigen::Index>(left);
  const auto r = static_cast<Eigen::Index>(right);
  const auto d = op.rows();
  CMatrix out = CMatrix::Zero(l * d * r, l * d * r);
  for (Eigen::Index a = 0; a < l; ++a)
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        if (op(i, j) == cplx(0.0, 0.0)) continue;
        for (Eigen::Index b = 0; b < r; ++b) out((a * d + i) * r + b, (a * d + j) * r + b) = op(i, j);
      }
  return out;
}

Spectrum eig_hermitian(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eig_hermitian: eigensolver did not converge within its iteration cap (" +
                         std::to_string(Eigen::SelfAdjointEigenSolver<CMatrix>::m_maxIterations) +
                         " QR sweeps per eigenvalue, n=" + std::to_string(m.rows()) + ")");
  }
  Spectrum s;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return s;
}

Spectrum eig_hermitian(const DensityMatrix& rho) { return eig_hermitian(rho.matrix()); }

double entropy_from_eigenvalues(std::span<const double> eigenvalues, double tol) {
  double h = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -tol) throw InvariantError("psd", -lambda, "eigenvalue below tolerance in entropy");
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return std::max(h, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const Spectrum s = eig_hermitian(rho);
  return entropy_from_eigenvalues(std::span<const double>(s.eigenvalues.data(),
                                                          static_cast<std::size_t>(s.eigenvalues.size())),
                                  rho.tol());
}

double binary_entropy(double p) {
  const double values[2] = {p, 1.0 - p};
  return entropy_from_eigenvalues(values);
}

double shannon_entropy(std::span<const double> probabilities) {
  return entropy_from_eigenvalues(probabilities);
}

CMatrix sqrt_psd(const CMatrix& m, double tol) {
  const Spectrum s = eig_hermitian(m);
  const double top = std::max(s.eigenvalues.maxCoeff(), 0.0);
  // Eigenvalues at roundoff level are zero; their square roots would inject
  // O(sqrt(eps)) noise.
  const double zero_cut = 64.0 * std::numeric_limits<double>::epsilon() * std::max(top, 1.0);
  RVector roots(s.eigenvalues.size());
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double lambda = s.eigenvalues(i);
    if (lambda < -tol) {
      throw NumericalError("sqrt_psd: indefinite matrix (eigenvalue " + std::to_string(lambda) + ")");
    }
    roots(i) = lambda <= zero_cut ? 0.0 : std::sqrt(lambda);
  }
  return s.eigenvectors * roots.asDiagonal() * s.eigenvectors.adjoint();
}

double trace_norm(const CMatrix& m) {
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues().sum();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw InvalidArgument("fidelity: dimension mismatch");
  // tr sqrt(sqrt(rho) sigma sqrt(rho)) equals the sum of singular values of
  // sqrt(rho) sqrt(sigma); the SVD route keeps near-orthogonal pairs accurate.
  const CMatrix a = sqrt_psd(rho.matrix(), rho.tol());
  const CMatrix b = sqrt_psd(sigma.matrix(), sigma.tol());
  return std::clamp(trace_norm(a * b), 0.0, 1.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw InvalidArgument("trace_distance: dimension mismatch");
  const Spectrum s = eig_hermitian(CMatrix(hermitize(rho.matrix() - sigma.matrix())));
  return std::clamp(0.5 * s.eigenvalues.cwiseAbs().sum(), 0.0, 1.0);
}

}  // namespace qobj
