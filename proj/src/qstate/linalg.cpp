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


#include "qobj/linalg.hpp"

#include <Eigen/Dense>
#include <string>

#include "qobj/errors.hpp"

namespace qobj::linalg {

std::vector<double> symmetric_eigenvalues(std::vector<double>& packed, std::size_t n) {
  if (packed.size() != n * n) throw InvalidArgument("symmetric_eigenvalues: buffer is not n*n");
  if (n == 0) return {};
  const auto ln = static_cast<Eigen::Index>(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  {
    // Row-major lower triangle read as column-major is the upper triangle.
    const Eigen::Map<const Eigen::MatrixXd> upper(packed.data(), ln, ln);
    Eigen::MatrixXd full = upper.selfadjointView<Eigen::Upper>();
    std::vector<double>().swap(packed);
    solver.compute(full, Eigen::EigenvaluesOnly);
  }
  if (solver.info() != Eigen::Success)
    throw NumericalError("symmetric_eigenvalues: tridiagonal QR did not converge (n=" + std::to_string(n) + ")");
  const Eigen::VectorXd& w = solver.eigenvalues();
  return {w.data(), w.data() + w.size()};
}

}  // namespace qobj::linalg
