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
#include "qobj/info_measures.hpp"
#include "qobj/sbs.hpp"

using namespace qobj;
using namespace qobj::test;

namespace {

// Entropy in bits straight from Eigen, independent of the library path.
double oracle_entropy(const CMatrix& m) {
  const Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
  double h = 0.0;
  for (double p : es.eigenvalues())
    if (p > 1e-14) h -= p * std::log2(p);
  return h;
}

// chi(E|S) for S = qubit 0 of a two-qubit state on a 100 x 100 (theta, phi) grid.
double fine_grid_chi(const DensityMatrix& rho) {
  const CMatrix& r = rho.matrix();
  double best = 0.0;
  constexpr int kSteps = 100;
  for (int i = 0; i <= kSteps; ++i) {
    const double theta = std::numbers::pi / 2 * i / kSteps;
    for (int j = 0; j < kSteps; ++j) {
      const double phi = 2 * std::numbers::pi * j / kSteps;
      CVector up(2), down(2);
      up << std::cos(theta / 2), std::polar(std::sin(theta / 2), phi);
      down << -std::polar(std::sin(theta / 2), -phi), std::cos(theta / 2);
      double avg = 0.0;
      for (const CVector* v : {&up, &down}) {
        CMatrix cond = CMatrix::Zero(2, 2);
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int e = 0; e < 2; ++e)
              for (int f = 0; f < 2; ++f) cond(e, f) += std::conj((*v)(a)) * r(a * 2 + e, b * 2 + f) * (*v)(b);
        const double p = cond.trace().real();
        if (p > 1e-14) avg += p * oracle_entropy(cond / p);
      }
      best = std::max(best, oracle_entropy(partial_trace(rho, {1}).matrix()) - avg);
    }
  }
  return best;
}

DensityMatrix classical_joint(const Eigen::MatrixXd& p) {
  CMatrix m = CMatrix::Zero(p.size(), p.size());
  for (Eigen::Index a = 0; a < p.rows(); ++a)
    for (Eigen::Index b = 0; b < p.cols(); ++b) m(a * p.cols() + b, a * p.cols() + b) = p(a, b);
  return DensityMatrix(m, {static_cast<std::size_t>(p.rows()), static_cast<std::size_t>(p.cols())});
}

double shannon_mi(const Eigen::MatrixXd& p) {
  const Eigen::VectorXd pa = p.rowwise().sum();
  const Eigen::RowVectorXd pb = p.colwise().sum();
  double mi = 0.0;
  for (Eigen::Index a = 0; a < p.rows(); ++a)
    for (Eigen::Index b = 0; b < p.cols(); ++b)
      if (p(a, b) > 0) mi += p(a, b) * std::log2(p(a, b) / (pa(a) * pb(b)));
  return mi;
}

SbsSpec ghz_spec(std::size_t envs) {
  SbsSpec spec;
  spec.pointer_probs = {0.5, 0.5};
  spec.pointer_basis = CMatrix::Identity(2, 2);
  spec.branches = {std::vector<DensityMatrix>(envs, ket(2, 0)), std::vector<DensityMatrix>(envs, ket(2, 1))};
  return spec;
}

}  // namespace

TEST_CASE("mutual information") {
  Rng rng(21);
  const auto prod = tensor(random_density_matrix({2}, rng), random_density_matrix({3}, rng));
  CHECK(std::abs(mutual_information(prod, {0}, {1})) < 1e-10);
  CHECK(mutual_information(bell(), {0}, {1}) == doctest::Approx(2.0));

  Eigen::MatrixXd p(2, 3);
  p << 0.1, 0.25, 0.05, 0.3, 0.1, 0.2;
  CHECK(mutual_information(classical_joint(p), {0}, {1}) == doctest::Approx(shannon_mi(p)).epsilon(1e-12));
  CHECK(classical_mutual_information(p) == doctest::Approx(shannon_mi(p)).epsilon(1e-12));

  CHECK_THROWS_AS(mutual_information(bell(), {0}, {0}), InvalidArgument);
}

TEST_CASE("conditional mutual information") {
  Rng rng(23);
  const DensityMatrix parts[] = {random_density_matrix({2}, rng), random_density_matrix({2}, rng),
                                 random_density_matrix({2}, rng)};
  CHECK(std::abs(conditional_mutual_information(tensor(parts), {0}, {1}, {2})) < 1e-10);

  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = random_density_matrix({2, 2, 2}, rng);
    const double chain = mutual_information(rho, {0}, {1, 2}) -
                         mutual_information(partial_trace(rho, {0, 1}), {0}, {1});
    CHECK(std::abs(chain - conditional_mutual_information(rho, {0}, {2}, {1})) < 1e-9);
    CHECK(conditional_mutual_information(rho, {0}, {2}, {1}) >= -1e-9);
    // Enlarging the observed fraction never lowers I.
    CHECK(mutual_information(partial_trace(rho, {0, 1}), {0}, {1}) <= mutual_information(rho, {0}, {1, 2}) + 1e-9);
  }

  SUBCASE("Markov fixture") {
    const MarkovFixture mf = build_markov_fixture(
        {{0.3, bell(), random_density_matrix({2}, rng)}, {0.7, random_density_matrix({2, 2}, rng), random_density_matrix({2}, rng)}});
    CHECK(std::abs(conditional_mutual_information(mf.state, {0}, {2}, {1})) < 1e-8);
  }
}

TEST_CASE("multipartite conditional mutual information") {
  CHECK(std::abs(multipartite_cmi(build_sbs(ghz_spec(3)), 0)) < 1e-8);

  // Classically correlated GHZ environment carries one bit, the pure one two.
  const auto dephased = tensor(diag_state({0.3, 0.7}), DensityMatrix(CMatrix(CVector::Map(std::vector<cplx>{0.5, 0, 0, 0.5}.data(), 4).asDiagonal()), {2, 2}));
  CHECK(multipartite_cmi(dephased, 0) == doctest::Approx(1.0));
  CHECK(multipartite_cmi(tensor(diag_state({0.3, 0.7}), bell()), 0) == doctest::Approx(2.0));

  Rng rng(29);
  const DensityMatrix parts[] = {random_density_matrix({2}, rng), random_density_matrix({2}, rng),
                                 random_density_matrix({3}, rng)};
  CHECK(std::abs(multipartite_cmi(tensor(parts), 0)) < 1e-9);
  CHECK_THROWS_AS(multipartite_cmi(bell(), 0), InvalidArgument);
}

TEST_CASE("Holevo quantity") {
  Rng rng(31);
  OptimizerConfig cfg;
  const auto prod = tensor(random_density_matrix({2}, rng), random_density_matrix({2}, rng));
  CHECK(std::abs(holevo_quantity(prod, 0, cfg).value) < 1e-9);
  for (int trial = 0; trial < 3; ++trial) {
    const auto rho = random_density_matrix({2, 2}, rng);
    const double chi = holevo_quantity(rho, 0, cfg).value;
    CHECK(std::abs(chi - fine_grid_chi(rho)) < 1e-3);
    CHECK(chi <= mutual_information(rho, {0}, {1}) + 1e-9);
  }
}

TEST_CASE("optimizer maxima grow with the grid") {
  Rng rng(37);
  const auto rho = random_density_matrix({2, 2}, rng);
  double chi = -1, acc = -1, dis = -1, two = -1;
  for (int points : {8, 32, 128, 512, 2048}) {
    OptimizerConfig cfg;
    cfg.grid_points = points;
    const double c = holevo_quantity(rho, 0, cfg).value, a = accessible_information(rho, 0, cfg).value;
    const double d = discord_one_sided(rho, 0, cfg).value, t = discord_two_sided(rho, cfg).value;
    CHECK(c >= chi - 1e-12);
    CHECK(a >= acc - 1e-12);
    // Discord is I minus a maximum, so it can only shrink.
    CHECK((dis < 0 || d <= dis + 1e-12));
    CHECK((two < 0 || t <= two + 1e-12));
    chi = c, acc = a, dis = d, two = t;
  }
}

TEST_CASE("one-sided discord") {
  OptimizerConfig cfg;
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(std::abs(discord_one_sided(random_classical_quantum(2, 2, rng), 1, cfg).value) < 1e-6);
  CHECK(discord_one_sided(bell(), 0, cfg).value == doctest::Approx(1.0).epsilon(1e-6));
  for (int trial = 0; trial < 5; ++trial) CHECK(discord_one_sided(random_density_matrix({2, 2}, rng), 0, cfg).value > 1e-6);
  CHECK_THROWS(discord_one_sided(random_density_matrix({3, 2}, rng), 0, cfg));
}

TEST_CASE("two-sided discord") {
  OptimizerConfig cfg;
  Rng rng(43);
  for (int trial = 0; trial < 5; ++trial)
    CHECK(std::abs(discord_two_sided(random_classical_classical(2, 2, rng), cfg).value) < 1e-6);
  // Mixture of |0>|0> and |+>|+>: neither side has an orthogonal classical basis.
  CVector plus(2);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  const auto pp = DensityMatrix::pure(plus, {2});
  const CMatrix mix = 0.5 * tensor(ket(2, 0), ket(2, 0)).matrix() + 0.5 * tensor(pp, pp).matrix();
  CHECK(discord_two_sided(DensityMatrix(mix, {2, 2}), cfg).value > 1e-3);
  CHECK(std::abs(discord_two_sided(tensor(pp, ket(2, 1)), cfg).value) < 1e-9);
}

TEST_CASE("accessible information") {
  OptimizerConfig cfg;
  Rng rng(47);
  SbsGenOptions opt;
  opt.environments = 3;
  const DensityMatrix sbs = build_sbs(random_sbs_spec(opt, rng));
  const double hs = von_neumann_entropy(partial_trace(sbs, {0}));
  for (std::size_t k = 1; k <= 3; ++k)
    CHECK(accessible_information(partial_trace(sbs, {0, k}), 0, cfg).value == doctest::Approx(hs).epsilon(1e-6));
  const auto prod = tensor(random_density_matrix({2}, rng), random_density_matrix({2}, rng));
  CHECK(std::abs(accessible_information(prod, 0, cfg).value) < 1e-9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto rho = random_density_matrix({2, 2}, rng);
    CHECK(accessible_information(rho, 0, cfg).value <= mutual_information(rho, {0}, {1}) + 1e-9);
  }
}

TEST_CASE("measurement channel is non-signaling") {
  Rng rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = random_density_matrix({2, 3}, rng);
    const Measurement m = Measurement::from_basis(random_unitary(3, rng));
    const auto after = apply_measurement_channel(rho, 1, m);
    CHECK(max_abs_diff(partial_trace(after, {0}).matrix(), partial_trace(rho, {0}).matrix()) < 1e-9);
  }
}

TEST_CASE("measurements validate") {
  Measurement bad;
  bad.elements = {CMatrix::Identity(2, 2) * 0.5};
  CHECK_THROWS_AS(bad.validate(), InvariantError);
  CHECK_NOTHROW(Measurement::computational(3).validate());
  CHECK_NOTHROW(Measurement::qubit(Eigen::Vector3d(0, 0.6, 0.8)).validate());
}

TEST_CASE("QD condition") {
  Rng rng(59);
  SbsGenOptions opt;
  opt.environments = 3;
  const DensityMatrix sbs = build_sbs(random_sbs_spec(opt, rng));
  QdOptions qd;
  qd.convention = FractionConvention::average_exhaustive;
  const QdReport r = qd_condition_check(sbs, 0, 0.0, qd);
  REQUIRE(r.rows.size() == 3);
  for (const auto& row : r.rows) {
    CHECK(row.passes);
    CHECK(std::abs(row.I - r.H_S) < 1e-9);
  }
  const auto prod = tensor(diag_state({0.3, 0.7}), random_density_matrix({2, 2}, rng));
  for (const auto& row : qd_condition_check(prod, 0, 0.05, {}).rows) CHECK_FALSE(row.passes);
}
