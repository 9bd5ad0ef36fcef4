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

#include <doctest.h>

#include <cmath>
#include <complex>

#include "qobj/density_matrix.hpp"
#include "qobj/random.hpp"

namespace qobj::test {

inline double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  return (a - b).cwiseAbs().maxCoeff();
}

inline DensityMatrix diag_state(std::initializer_list<double> p) {
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(p.size()), static_cast<Eigen::Index>(p.size()));
  Eigen::Index i = 0;
  for (double v : p) m(i, i) = v, ++i;
  return DensityMatrix(m, {p.size()});
}

inline DensityMatrix ket(std::size_t d, std::size_t i) {
  const std::size_t digit[] = {i};
  return DensityMatrix::basis_state({d}, digit);
}

inline DensityMatrix bell() {
  CVector psi = CVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(psi, {2, 2});
}

// Shannon entropy in bits computed without the library.
inline double h2(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

}  // namespace qobj::test
