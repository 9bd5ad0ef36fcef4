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

#include "qobj/sbs.hpp"

namespace qobj {

StrongQdReport strong_qd_check(const DensityMatrix& rho, std::size_t system_index, const OptimizerConfig& cfg,
                               const StrongQdTolerances& tolerances) {
  if (system_index >= rho.subsystems()) throw InvalidArgument("strong_qd_check: system index out of range");
  const IndexSet envs = complement(rho.subsystems(), {system_index});
  if (envs.empty()) throw InvalidArgument("strong_qd_check: state has no environment");

  StrongQdReport r;
  r.optimizer = cfg;
  r.tolerances = tolerances;
  r.H_S = von_neumann_entropy(partial_trace(rho, {system_index}));
  r.I = mutual_information(rho, {system_index}, envs);
  r.chi = holevo_quantity(rho, system_index, cfg).value;
  r.cond_chi = std::abs(r.I - r.chi);

  for (auto k : envs) {
    const DensityMatrix pair = partial_trace(rho, {system_index, k});
    const std::size_t s_pos = system_index < k ? 0 : 1;
    const double acc = accessible_information(pair, s_pos, cfg).value;
    r.cond_acc.push_back(std::abs(acc - r.H_S));
  }
  r.cond_indep = envs.size() >= 2 ? multipartite_cmi(rho, system_index) : 0.0;

  r.chi_ok = r.cond_chi <= tolerances.chi;
  r.acc_ok = std::all_of(r.cond_acc.begin(), r.cond_acc.end(), [&](double v) { return v <= tolerances.acc; });
  r.indep_ok = std::abs(r.cond_indep) <= tolerances.indep;
  r.pass = r.chi_ok && r.acc_ok && r.indep_ok;
  return r;
}

}  // namespace qobj
