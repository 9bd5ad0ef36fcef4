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

#include "qobj/sbs.hpp"

namespace qobj {

DensityMatrix build_star_graph_state(std::size_t n, const std::vector<double>& thetas,
                                     const std::vector<double>& phis) {
  if (n == 0) throw InvalidArgument("build_star_graph_state: need at least one environment qubit");
  if (thetas.size() != n - 1) throw InvalidArgument("build_star_graph_state: expected N-1 chain angles");
  if (phis.size() != n) throw InvalidArgument("build_star_graph_state: expected N system couplings");
  const std::size_t qubits = n + 1;
  if (qubits >= 64 || (std::size_t{1} << qubits) > kMaxTotalDim)
    throw DimensionGuardError(qubits >= 64 ? SIZE_MAX : std::size_t{1} << qubits, kMaxTotalDim,
                              "build_star_graph_state");

  const std::size_t d = std::size_t{1} << qubits;
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(qubits));
  CVector psi(static_cast<Eigen::Index>(d));
  for (std::size_t idx = 0; idx < d; ++idx) {
    // Qubit 0 (S) is the most significant bit.
    auto bit = [&](std::size_t q) { return (idx >> (qubits - 1 - q)) & 1U; };
    double phase = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      if (bit(0) && bit(k + 1)) phase += phis[k];
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (bit(j + 1) && bit(j + 2)) phase += thetas[j];
    psi(static_cast<Eigen::Index>(idx)) = amp * std::polar(1.0, phase);
  }
  return DensityMatrix::pure(psi, Dims(qubits, 2));
}

DensityMatrix build_branching_state(cplx alpha, cplx beta, const std::vector<double>& thetas) {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm - 1.0) > kStateTol) throw InvariantError("unit_trace", std::abs(norm - 1.0), "|alpha|^2 + |beta|^2");
  const std::size_t n = thetas.size();
  if (n == 0) throw InvalidArgument("build_branching_state: need at least one environment qubit");
  if (n + 1 >= 64 || (std::size_t{1} << (n + 1)) > kMaxTotalDim)
    throw DimensionGuardError(n + 1 >= 64 ? SIZE_MAX : std::size_t{1} << (n + 1), kMaxTotalDim,
                              "build_branching_state");

  CVector zero = CVector::Zero(1);
  zero(0) = 1.0;
  CVector branch = zero;
  CVector env0 = zero;
  for (double theta : thetas) {
    CVector t(2), z(2);
    t << std::cos(theta / 2), std::sin(theta / 2);
    z << 1.0, 0.0;
    branch = kron(branch, t);
    env0 = kron(env0, z);
  }
  CVector s0(2), s1(2);
  s0 << 1.0, 0.0;
  s1 << 0.0, 1.0;
  const CVector psi = alpha * kron(s0, env0) + beta * kron(s1, branch);
  return DensityMatrix::pure(psi, Dims(n + 1, 2));
}

double branching_macro_overlap(const std::vector<double>& thetas, const IndexSet& mac) {
  if (mac.empty()) throw InvalidArgument("branching_macro_overlap: empty macrofraction");
  double overlap = 1.0;
  for (auto i : mac) overlap *= std::cos(thetas.at(i) / 2);
  return std::abs(overlap);
}

}  // namespace qobj
