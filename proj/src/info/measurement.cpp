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


#include <cmath>

#include "qobj/info_measures.hpp"

namespace qobj {
namespace {

const CMatrix& pauli(int k) {
  static const CMatrix sx = (CMatrix(2, 2) << 0, 1, 1, 0).finished();
  static const CMatrix sy = (CMatrix(2, 2) << 0, cplx(0, -1), cplx(0, 1), 0).finished();
  static const CMatrix sz = (CMatrix(2, 2) << 1, 0, 0, -1).finished();
  return k == 0 ? sx : (k == 1 ? sy : sz);
}

}  // namespace

void Measurement::validate(double tol) const {
  if (elements.empty()) throw InvariantError("completeness", 1.0, "measurement has no elements");
  const auto d = elements.front().rows();
  CMatrix sum = CMatrix::Zero(d, d);
  for (const auto& e : elements) {
    if (e.rows() != d || e.cols() != d) throw InvalidArgument("measurement elements differ in size");
    const double herm = (e - e.adjoint()).cwiseAbs().maxCoeff();
    if (herm > tol) throw InvariantError("hermitian", herm, "measurement element");
    const double min_eig = eig_hermitian(e).eigenvalues.minCoeff();
    if (min_eig < -tol) throw InvariantError("psd", -min_eig, "measurement element");
    sum += e;
  }
  const double completeness = (sum - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (completeness > tol) throw InvariantError("completeness", completeness);
  if (kind == MeasurementKind::povm) return;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const CMatrix expected = i == j ? elements[i] : CMatrix::Zero(d, d);
      const double err = (elements[i] * elements[j] - expected).cwiseAbs().maxCoeff();
      if (err > tol) throw InvariantError("orthogonality", err);
    }
    if (kind == MeasurementKind::projective_rank1) {
      const double err = std::abs(elements[i].trace().real() - 1.0);
      if (err > tol) throw InvariantError("rank1", err);
    }
  }
}

Measurement Measurement::computational(std::size_t d) {
  return from_basis(CMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
}

Measurement Measurement::from_basis(const CMatrix& basis) {
  Measurement m;
  m.kind = MeasurementKind::projective_rank1;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) m.elements.push_back(basis.col(i) * basis.col(i).adjoint());
  return m;
}

Measurement Measurement::qubit(const Eigen::Vector3d& n) {
  const Eigen::Vector3d u = n.normalized();
  CMatrix ndots = u.x() * pauli(0) + u.y() * pauli(1) + u.z() * pauli(2);
  const CMatrix id = CMatrix::Identity(2, 2);
  Measurement m;
  m.kind = MeasurementKind::projective_rank1;
  m.elements = {0.5 * (id + ndots), 0.5 * (id - ndots)};
  return m;
}

Measurement Measurement::identity(std::size_t d) {
  Measurement m;
  m.kind = MeasurementKind::projective;
  m.elements = {CMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d))};
  return m;
}

DensityMatrix measure_subsystem(const DensityMatrix& rho, std::size_t subsystem, const Measurement& m) {
  const std::size_t n = rho.subsystems();
  if (subsystem >= n) throw InvalidArgument("measure_subsystem: subsystem out of range");
  if (m.dim() != rho.dim_of(subsystem)) throw InvalidArgument("measure_subsystem: measurement dimension mismatch");
  if (m.outcomes() < 2) throw InvalidArgument("measure_subsystem: need at least two outcomes");

  IndexSet order{subsystem};
  for (auto i : complement(n, {subsystem})) order.push_back(i);
  const DensityMatrix front = permute_subsystems(rho, order);
  const auto ds = static_cast<Eigen::Index>(rho.dim_of(subsystem));
  const auto dr = static_cast<Eigen::Index>(rho.dim()) / ds;
  const auto k = static_cast<Eigen::Index>(m.outcomes());

  CMatrix out = CMatrix::Zero(k * dr, k * dr);
  for (Eigen::Index i = 0; i < k; ++i) {
    const CMatrix& e = m.elements[static_cast<std::size_t>(i)];
    CMatrix cond = CMatrix::Zero(dr, dr);
    for (Eigen::Index a = 0; a < ds; ++a)
      for (Eigen::Index b = 0; b < ds; ++b) {
        if (e(b, a) == cplx(0.0, 0.0)) continue;
        cond += e(b, a) * front.matrix().block(a * dr, b * dr, dr, dr);
      }
    out.block(i * dr, i * dr, dr, dr) = 0.5 * (cond + cond.adjoint());
  }

  Dims dims{static_cast<std::size_t>(k)};
  for (std::size_t j = 1; j < order.size(); ++j) dims.push_back(rho.dims()[order[j]]);
  DensityMatrix measured = DensityMatrix::assume_valid(std::move(out), std::move(dims), rho.tol());
  // Move the outcome register back to `subsystem`.
  IndexSet back(n);
  for (std::size_t pos = 0; pos < n; ++pos) back[order[pos]] = pos;
  return permute_subsystems(measured, back);
}

DensityMatrix apply_measurement_channel(const DensityMatrix& rho, std::size_t subsystem,
                                        const Measurement& m) {
  if (subsystem >= rho.subsystems()) throw InvalidArgument("measurement channel: subsystem out of range");
  if (m.dim() != rho.dim_of(subsystem)) throw InvalidArgument("measurement channel: dimension mismatch");
  const auto d = static_cast<Eigen::Index>(rho.dim());
  CMatrix out = CMatrix::Zero(d, d);
  for (const auto& e : m.elements) {
    const CMatrix kraus = embed_operator(
        m.kind == MeasurementKind::povm ? sqrt_psd(e) : e, subsystem, rho.dims());
    out += kraus * rho.matrix() * kraus.adjoint();
  }
  return DensityMatrix::assume_valid(0.5 * (out + out.adjoint()), rho.dims(), rho.tol());
}

}  // namespace qobj
