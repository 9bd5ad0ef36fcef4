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
#include <numbers>

#include "qobj/harness.hpp"

namespace qobj::harness {
namespace {

constexpr double kPi = std::numbers::pi;

json provenance(const std::string& generator, std::uint64_t seed, json parameters) {
  return {{"generator", generator}, {"seed", seed}, {"parameters", std::move(parameters)}, {"tool_version", kToolVersion}};
}

Fixture make(std::string name, DensityMatrix state, std::size_t s, json prov, json checks) {
  return Fixture{std::move(name), StateFile{std::move(state), s, std::move(prov), std::move(checks)}};
}

DensityMatrix bell_state() {
  CVector psi = CVector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(psi, {2, 2});
}

DensityMatrix traced_to_prefix(const DensityMatrix& rho, std::size_t keep) {
  IndexSet idx(keep);
  for (std::size_t i = 0; i < keep; ++i) idx[i] = i;
  return partial_trace(rho, idx);
}

json check_entry(const std::string& name, const json& expected, const json& actual, bool pass) {
  return {{"check", name}, {"expected", expected}, {"actual", actual}, {"pass", pass}};
}

}  // namespace

std::vector<Fixture> canonical_fixtures(std::uint64_t seed) {
  std::vector<Fixture> out;
  Rng rng(seed);

  auto sbs_fixture = [&](const std::string& name, SbsGenOptions opt, json checks) {
    const SbsSpec spec = random_sbs_spec(opt, rng);
    json params = {{"environments", opt.environments}, {"system_dim", opt.system_dim},
                   {"max_env_dim", opt.max_env_dim}, {"joint", opt.joint}};
    out.push_back(make(name, build_sbs(spec), 0, provenance("random_sbs_spec", seed, params), std::move(checks)));
  };
  sbs_fixture("sbs_product_qubit", {2, 2, 3, false, 1e-3},
              {{"is_sbs", true}, {"qd", {{"delta", 0.0}, {"all_pass", true}}}, {"strong_qd_pass", true}});
  sbs_fixture("sbs_product_qutrit", {3, 3, 3, false, 1e-3},
              {{"is_sbs", true}, {"qd", {{"delta", 0.0}, {"all_pass", true}}}});
  sbs_fixture("sbs_joint_qubit", {3, 2, 3, true, 1e-3},
              {{"is_sbs", true}, {"qd", {{"delta", 0.0}, {"all_pass", true}}}});

  {
    SbsSpec ghz;
    ghz.pointer_probs = {0.5, 0.5};
    ghz.pointer_basis = CMatrix::Identity(2, 2);
    const std::size_t zero[] = {0}, one[] = {1};
    const auto b0 = DensityMatrix::basis_state({2}, zero), b1 = DensityMatrix::basis_state({2}, one);
    ghz.branches = {{b0, b0}, {b1, b1}};
    out.push_back(make("ghz_dephased", build_sbs(ghz), 0, provenance("build_sbs", seed, {{"branches", "|0>,|1>"}}),
                       {{"is_sbs", true}, {"qd", {{"delta", 0.0}, {"all_pass", true}}}, {"strong_qd_pass", true}}));
  }

  const std::vector<double> star_phis(3, kPi), star_thetas(2, 0.0);
  const DensityMatrix star = build_star_graph_state(3, star_thetas, star_phis);
  out.push_back(make("star_graph_traced", traced_to_prefix(star, 3), 0,
                     provenance("build_star_graph_state", seed, {{"N", 3}, {"thetas", star_thetas}, {"phis", star_phis}, {"traced", {3}}}),
                     {{"is_sbs", true}, {"qd", {{"delta", 0.0}, {"all_pass", true}}}}));
  out.push_back(make("star_graph_pure", star, 0,
                     provenance("build_star_graph_state", seed, {{"N", 3}, {"thetas", star_thetas}, {"phis", star_phis}}),
                     {{"is_sbs", false}, {"qd", {{"delta", 0.05}, {"all_pass", false}}}}));
  const std::vector<double> diamond_thetas(2, kPi);
  out.push_back(make("diamond_graph_traced", traced_to_prefix(build_star_graph_state(3, diamond_thetas, star_phis), 3), 0,
                     provenance("build_star_graph_state", seed, {{"N", 3}, {"thetas", diamond_thetas}, {"phis", star_phis}, {"traced", {3}}}),
                     {{"is_sbs", false}, {"coherence_norm_min", 1e-3}}));

  const cplx amp(1.0 / std::sqrt(2.0), 0.0);
  const std::vector<double> pi_thetas(5, kPi), half_thetas(5, kPi / 2);
  out.push_back(make("branching_theta_pi", traced_to_prefix(build_branching_state(amp, amp, pi_thetas), 5), 0,
                     provenance("build_branching_state", seed, {{"alpha", 1 / std::sqrt(2.0)}, {"beta", 1 / std::sqrt(2.0)}, {"thetas", pi_thetas}, {"traced", {5}}}),
                     {{"is_sbs", true}, {"qd", {{"delta", 0.0}, {"all_pass", true}}}}));
  out.push_back(make("branching_theta_half_pi", traced_to_prefix(build_branching_state(amp, amp, half_thetas), 5), 0,
                     provenance("build_branching_state", seed, {{"alpha", 1 / std::sqrt(2.0)}, {"beta", 1 / std::sqrt(2.0)}, {"thetas", half_thetas}, {"traced", {5}}}),
                     {{"is_sbs", false},
                      {"branch_overlap", {{"macro", {1, 2, 3, 4}}, {"value", branching_macro_overlap(half_thetas, {0, 1, 2, 3})}, {"tol", 1e-10}}}}));

  {
    CVector singlet = CVector::Zero(4);
    singlet(1) = 1.0 / std::sqrt(2.0);
    singlet(2) = -1.0 / std::sqrt(2.0);
    const MarkovFixture mf = build_markov_fixture({{0.5, bell_state(), random_density_matrix({2}, rng)},
                                                   {0.5, DensityMatrix::pure(singlet, {2, 2}), random_density_matrix({2}, rng)}});
    out.push_back(make("markov_entangled", mf.state, 0, provenance("build_markov_fixture", seed, {{"blocks", 2}, {"left", "Bell, singlet"}}),
                       {{"cmi_max", 1e-8}, {"strong_qd_pass", false}, {"cond_chi_min", 1e-3}, {"discord_min", 1e-3}, {"is_sbs", false}}));
  }
  {
    const MarkovFixture mf = build_markov_fixture({{1.0, tensor(random_density_matrix({2}, rng), random_density_matrix({2}, rng)),
                                                    tensor(random_density_matrix({2}, rng), random_density_matrix({2}, rng))}});
    out.push_back(make("markov_product", mf.state, 0, provenance("build_markov_fixture", seed, {{"blocks", 1}, {"left", "product"}}),
                       {{"cmi_max", 1e-8}, {"mutual_information_max", 1e-9}}));
  }

  out.push_back(make("bell", bell_state(), 0, provenance("bell", seed, json::object()),
                     {{"qd", {{"delta", 0.05}, {"all_pass", false}}}, {"discord_min", 0.5}, {"is_sbs", false}}));
  out.push_back(make("classical_classical", random_classical_classical(2, 2, rng), 0,
                     provenance("random_classical_classical", seed, {{"dims", {2, 2}}}),
                     {{"two_sided_discord_max", 1e-6}}));
  {
    CMatrix mixed(2, 2);
    mixed << 0.7, 0.0, 0.0, 0.3;
    out.push_back(make("product_mixed", tensor(DensityMatrix(mixed, {2}), random_density_matrix({2, 2}, rng)), 0,
                       provenance("product", seed, {{"rho_S", "diag(0.7, 0.3)"}}),
                       {{"qd", {{"delta", 0.05}, {"all_pass", false}}}, {"strong_qd_pass", false}, {"mutual_information_max", 1e-9}}));
  }
  return out;
}

FixtureVerdict verify_fixture(const Fixture& fixture, const ExperimentConfig& cfg) {
  FixtureVerdict v;
  v.name = fixture.name;
  const DensityMatrix& rho = fixture.file.state;
  const std::size_t s = fixture.file.system_index;
  const IndexSet envs = complement(rho.subsystems(), {s});
  std::optional<SbsReport> sbs;
  std::optional<StrongQdReport> strong;
  auto sbs_report = [&]() -> const SbsReport& {
    if (!sbs) {
      SbsCheckOptions opt;
      opt.tolerance = cfg.tolerances.sbs;
      sbs = check_sbs(rho, s, opt);
    }
    return *sbs;
  };
  auto strong_report = [&]() -> const StrongQdReport& {
    if (!strong) strong = strong_qd_check(rho, s, cfg.optimizer, cfg.tolerances.strong_qd);
    return *strong;
  };

  for (const auto& [name, expected] : fixture.file.declared_checks.items()) {
    json actual;
    bool pass = false;
    try {
      if (name == "is_sbs") {
        actual = sbs_report().is_sbs;
        pass = actual == expected;
      } else if (name == "coherence_norm_min") {
        actual = sbs_report().coherence_norm;
        pass = actual.get<double>() >= expected.get<double>();
      } else if (name == "qd") {
        QdOptions opt;
        const QdReport r = qd_condition_check(rho, s, expected.at("delta").get<double>(), opt);
        bool all = true;
        for (const auto& row : r.rows) all = all && row.passes;
        actual = all;
        pass = all == expected.at("all_pass").get<bool>();
      } else if (name == "strong_qd_pass") {
        actual = strong_report().pass;
        pass = actual == expected;
      } else if (name == "cond_chi_min") {
        actual = strong_report().cond_chi;
        pass = actual.get<double>() >= expected.get<double>();
      } else if (name == "cmi_max") {
        actual = conditional_mutual_information(rho, {s}, {envs.back()}, IndexSet(envs.begin(), envs.end() - 1));
        pass = actual.get<double>() <= expected.get<double>();
      } else if (name == "mutual_information_max") {
        actual = mutual_information(rho, {s}, envs);
        pass = actual.get<double>() <= expected.get<double>();
      } else if (name == "discord_min") {
        actual = discord_one_sided(rho, s, cfg.optimizer).value;
        pass = actual.get<double>() >= expected.get<double>();
      } else if (name == "two_sided_discord_max") {
        actual = discord_two_sided(rho, cfg.optimizer).value;
        pass = actual.get<double>() <= expected.get<double>();
      } else if (name == "branch_overlap") {
        const IndexSet macro = expected.at("macro").get<IndexSet>();
        std::vector<IndexSet> groups{{s}, macro};
        for (auto k : envs)
          if (std::find(macro.begin(), macro.end(), k) == macro.end()) groups.push_back({k});
        SbsCheckOptions opt;
        opt.pointer_basis = CMatrix::Identity(static_cast<Eigen::Index>(rho.dim_of(s)), static_cast<Eigen::Index>(rho.dim_of(s)));
        opt.with_measurements = false;
        const SbsReport r = check_sbs(regroup(rho, groups), 0, opt);
        actual = r.pair_fidelity(0, 1);
        pass = std::abs(actual.get<double>() - expected.at("value").get<double>()) <= expected.at("tol").get<double>();
      } else {
        actual = "unknown check";
      }
    } catch (const std::exception& e) {
      actual = std::string("error: ") + e.what();
      pass = false;
    }
    v.details.push_back(check_entry(name, expected, actual, pass));
    v.pass = v.pass && pass;
  }
  return v;
}

}  // namespace qobj::harness
