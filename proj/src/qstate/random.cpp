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


#include "qobj/random.hpp"

#include <cmath>

namespace qobj {
namespace {

CMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < g.cols(); ++j)
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = cplx(re, im);
    }
  return g;
}

}  // namespace

CMatrix random_unitary(std::size_t d, Rng& rng) {
  const CMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const cplx diag = r(i, i);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(i) *= diag / mag;
  }
  return q;
}

CVector random_state_vector(std::size_t d, Rng& rng) {
  CVector v = ginibre(d, 1, rng).col(0);
  return v / v.norm();
}

DensityMatrix random_density_matrix(const Dims& dims, Rng& rng, std::size_t rank) {
  const std::size_t d = total_dimension(dims);
  const CMatrix g = ginibre(d, rank == 0 ? d : rank, rng);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix::assume_valid(std::move(rho), dims);
}

DensityMatrix random_pure_state(const Dims& dims, Rng& rng) {
  return DensityMatrix::pure(random_state_vector(total_dimension(dims), rng), dims);
}

}  // namespace qobj
