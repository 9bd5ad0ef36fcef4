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


#include "support.hpp"

#include <numbers>

#include "qobj/errors.hpp"
#include "qobj/linalg.hpp"

using namespace qobj;
using namespace qobj::test;

TEST_CASE("tensor of maximally mixed qubits") {
  const auto half = DensityMatrix::maximally_mixed({2});
  const auto r = tensor(half, half);
  CHECK(r.dims() == Dims{2, 2});
  CHECK(max_abs_diff(r.matrix(), CMatrix::Identity(4, 4) / 4.0) < 1e-15);
}

TEST_CASE("tensor of basis projectors") {
  const auto r = tensor(ket(2, 0), ket(2, 1));
  const std::size_t digits[] = {0, 1};
  CHECK(max_abs_diff(r.matrix(), DensityMatrix::basis_state({2, 2}, digits).matrix()) == 0.0);
}

TEST_CASE("partial trace") {
  Rng rng(11);
  SUBCASE("product reduction, random factors up to 4x4") {
    for (std::size_t da : {2, 3, 4})
      for (std::size_t db : {2, 3, 4}) {
        const auto a = random_density_matrix({da}, rng), b = random_density_matrix({db}, rng);
        const auto ab = tensor(a, b);
        CHECK(max_abs_diff(partial_trace(ab, {0}).matrix(), a.matrix()) < 1e-10);
        CHECK(max_abs_diff(partial_trace(ab, {1}).matrix(), b.matrix()) < 1e-10);
      }
  }
  SUBCASE("Bell state reduces to I/2") {
    CHECK(max_abs_diff(partial_trace(bell(), {0}).matrix(), CMatrix::Identity(2, 2) / 2.0) < 1e-15);
  }
  SUBCASE("middle factor of three, against explicit index sum") {
    const auto rho = random_density_matrix({2, 3, 2}, rng);
    CMatrix expect = CMatrix::Zero(3, 3);
    for (int b = 0; b < 3; ++b)
      for (int bp = 0; bp < 3; ++bp)
        for (int a = 0; a < 2; ++a)
          for (int c = 0; c < 2; ++c) expect(b, bp) += rho.matrix()(a * 6 + b * 2 + c, a * 6 + bp * 2 + c);
    CHECK(max_abs_diff(partial_trace(rho, {1}).matrix(), expect) < 1e-14);
  }
  SUBCASE("bad index") { CHECK_THROWS_AS(partial_trace(bell(), {2}), InvalidArgument); }
}

TEST_CASE("permute and regroup") {
  Rng rng(3);
  const auto a = random_density_matrix({2}, rng), b = random_density_matrix({3}, rng);
  CHECK(max_abs_diff(permute_subsystems(tensor(a, b), {1, 0}).matrix(), tensor(b, a).matrix()) < 1e-14);
  const auto c = random_density_matrix({2}, rng);
  const DensityMatrix abc[] = {a, b, c};
  const auto g = regroup(tensor(abc), {{2}, {0, 1}});
  CHECK(g.dims() == Dims{2, 6});
  CHECK(max_abs_diff(g.matrix(), tensor(c, tensor(a, b)).matrix()) < 1e-14);
}

TEST_CASE("eigenvalues") {
  auto eig = [](const DensityMatrix& r) { return eig_hermitian(r).eigenvalues; };
  const auto w = eig(DensityMatrix::maximally_mixed({2}));
  CHECK(w(0) == doctest::Approx(0.5));
  CHECK(w(1) == doctest::Approx(0.5));
  const auto v = eig(diag_state({0.1, 0.9}));
  CHECK(v(0) == doctest::Approx(0.9));
  CHECK(v(1) == doctest::Approx(0.1));
}

TEST_CASE("large symmetric eigenvalues agree with a dense solver") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  for (std::size_t n : {1, 63, 64, 200}) {
    Eigen::MatrixXd a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = normal(rng);
    std::vector<double> packed(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) packed[i * n + j] = a(i, j);
    const auto got = linalg::symmetric_eigenvalues(packed, n);
    const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues();
    for (std::size_t i = 0; i < n; ++i) CHECK(got[i] == doctest::Approx(ref(i)).epsilon(1e-10));
  }
}

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(ket(2, 0)) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed({2})) == doctest::Approx(1.0));
  const double h = -0.1 * std::log(0.1) / std::log(2.0) - 0.9 * std::log(0.9) / std::log(2.0);
  CHECK(von_neumann_entropy(diag_state({0.1, 0.9})) == doctest::Approx(h).epsilon(1e-12));
  CHECK(h == doctest::Approx(0.4690).epsilon(1e-4));
  CHECK(binary_entropy(0.1) == doctest::Approx(h));

  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_density_matrix({2}, rng), b = random_density_matrix({3}, rng);
    CHECK(std::abs(von_neumann_entropy(tensor(a, b)) - von_neumann_entropy(a) - von_neumann_entropy(b)) < 1e-9);
    const auto r = random_density_matrix({4}, rng);
    const CMatrix u = random_unitary(4, rng);
    CHECK(std::abs(von_neumann_entropy(apply_unitary(r, u)) - von_neumann_entropy(r)) < 1e-9);
  }
}

TEST_CASE("entropy rejects eigenvalues below tolerance") {
  const double bad[] = {1.1, -0.1};
  CHECK_THROWS_AS(entropy_from_eigenvalues(bad), InvariantError);
  const double ok[] = {1.0 + 5e-10, -5e-10};
  CHECK(entropy_from_eigenvalues(ok) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("fidelity") {
  Rng rng(13);
  const auto r = random_density_matrix({3}, rng);
  CHECK(fidelity(r, r) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(fidelity(ket(2, 0), ket(2, 1)) == doctest::Approx(0.0));
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_density_matrix({2}, rng), b = random_density_matrix({2}, rng);
    const auto c = random_density_matrix({3}, rng), d = random_density_matrix({3}, rng);
    CHECK(std::abs(fidelity(tensor(a, c), tensor(b, d)) - fidelity(a, b) * fidelity(c, d)) < 1e-9);
  }
  SUBCASE("qubit closed form") {
    // F^2 = tr(ab) + 2 sqrt(det a det b) for qubits.
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_density_matrix({2}, rng), b = random_density_matrix({2}, rng);
      const double f2 = (a.matrix() * b.matrix()).trace().real() +
                        2.0 * std::sqrt(std::max(0.0, a.matrix().determinant().real() * b.matrix().determinant().real()));
      CHECK(fidelity(a, b) == doctest::Approx(std::sqrt(f2)).epsilon(1e-10));
    }
  }
  SUBCASE("rank deficient pair") {
    const auto p = random_pure_state({3}, rng), q = random_pure_state({3}, rng);
    const cplx overlap = (p.matrix() * q.matrix()).trace();
    CHECK(fidelity(p, q) == doctest::Approx(std::sqrt(overlap.real())).epsilon(1e-8));
  }
}

TEST_CASE("trace distance") {
  Rng rng(17);
  const auto r = random_density_matrix({2}, rng);
  CHECK(trace_distance(r, r) == doctest::Approx(0.0));
  CHECK(trace_distance(ket(2, 0), ket(2, 1)) == doctest::Approx(1.0));
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_density_matrix({2}, rng), b = random_density_matrix({2}, rng);
    const Eigen::SelfAdjointEigenSolver<CMatrix> es(a.matrix() - b.matrix());
    const double ref = 0.5 * es.eigenvalues().cwiseAbs().sum();
    CHECK(std::abs(trace_distance(a, b) - ref) < 1e-10);
  }
}

TEST_CASE("density matrix invariants are enforced") {
  CMatrix m(2, 2);
  m << 0.5, 0.0, 0.0, 0.4;
  CHECK_THROWS_AS(DensityMatrix(m, {2}), InvariantError);
  m << 1.2, 0.0, 0.0, -0.2;
  CHECK_THROWS_AS(DensityMatrix(m, {2}), InvariantError);
  m << 0.5, 0.3, 0.1, 0.5;
  CHECK_THROWS_AS(DensityMatrix(m, {2}), InvariantError);
  CHECK_THROWS(DensityMatrix(CMatrix::Identity(4, 4) / 4.0, {2, 3}));
  CHECK_THROWS_AS(DensityMatrix::maximally_mixed(Dims(17, 2)), DimensionGuardError);
}
