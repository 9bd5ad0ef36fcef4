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


#include <sstream>

#include "qobj/harness.hpp"

namespace qobj::harness {
namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

const char* convention_name(FractionConvention c) {
  switch (c) {
    case FractionConvention::prefix: return "prefix";
    case FractionConvention::average_exhaustive: return "average_exhaustive";
    case FractionConvention::average_sampled: return "average_sampled";
  }
  return "prefix";
}

json error_entry(const std::exception& e) {
  json j = {{"error", e.what()}};
  if (const auto* inv = dynamic_cast<const InvariantError*>(&e)) {
    j["invariant"] = inv->invariant();
    j["magnitude"] = inv->magnitude();
  }
  return j;
}

template <typename F>
json guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return error_entry(e);
  }
}

}  // namespace

json to_json(const SbsReport& r) {
  json fid = json::array();
  for (Eigen::Index i = 0; i < r.pair_fidelity.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < r.pair_fidelity.cols(); ++j) row.push_back(r.pair_fidelity(i, j));
    fid.push_back(row);
  }
  return {{"pointer_probs", r.pointer_probs},
          {"pointer_degenerate", r.pointer_degenerate},
          {"pointer_override", r.pointer_override},
          {"coherence_norm", r.coherence_norm},
          {"branch_fidelities", r.branch_fidelities},
          {"pair_fidelity", fid},
          {"epsilon_bound", r.epsilon_bound},
          {"disagreement_mass", r.disagreement_mass},
          {"bohr_nondisturbance_residual", r.bohr_nondisturbance_residual},
          {"is_sbs", r.is_sbs},
          {"agreement_ok", r.agreement_ok},
          {"tolerance", r.tolerance}};
}

json to_json(const StrongQdReport& r) {
  return {{"H_S", r.H_S},
          {"I", r.I},
          {"chi", r.chi},
          {"cond_chi", r.cond_chi},
          {"cond_acc", r.cond_acc},
          {"cond_indep", r.cond_indep},
          {"chi_ok", r.chi_ok},
          {"acc_ok", r.acc_ok},
          {"indep_ok", r.indep_ok},
          {"pass", r.pass},
          {"optimizer", to_json(r.optimizer)},
          {"tolerances", {{"chi", r.tolerances.chi}, {"acc", r.tolerances.acc}, {"indep", r.tolerances.indep}}}};
}

json to_json(const QdReport& r) {
  json rows = json::array();
  bool all = true;
  for (const auto& row : r.rows) {
    rows.push_back({{"size", row.size},
                    {"f", row.f},
                    {"I", row.I},
                    {"passes", row.passes},
                    {"chi", optional_number(row.chi)},
                    {"discord", optional_number(row.discord)}});
    all = all && row.passes;
  }
  return {{"H_S", r.H_S}, {"delta", r.delta}, {"convention", convention_name(r.convention)}, {"rows", rows},
          {"all_pass", all}};
}

json to_json(const MeasuresReport& r) {
  return {{"H_S", r.H_S},
          {"I", r.I},
          {"chi", optional_number(r.chi)},
          {"discord_one_sided", optional_number(r.discord_one_sided)},
          {"discord_two_sided", optional_number(r.discord_two_sided)},
          {"I_acc", optional_number(r.I_acc)},
          {"cmi_multi", optional_number(r.cmi_multi)},
          {"optimizer", to_json(r.optimizer)},
          {"converged",
           {{"chi", r.chi_converged}, {"I_acc", r.I_acc_converged}, {"discord_two_sided", r.discord_two_sided_converged}}}};
}

CheckSelection parse_checks(const std::string& list) {
  CheckSelection sel;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "sbs") sel.sbs = true;
    else if (item == "strong_qd") sel.strong_qd = true;
    else if (item == "qd") sel.qd = true;
    else if (item == "measures") sel.measures = true;
    else if (item == "all") sel = {true, true, true, true};
    else throw ValidationError("unknown check '" + item + "' (expected sbs, strong_qd, qd, measures or all)");
  }
  return sel;
}

json check_state_report(const StateFile& file, const CheckSelection& checks, const ExperimentConfig& cfg) {
  const DensityMatrix& rho = file.state;
  const std::size_t s = file.system_index;
  json report;
  report["tool_version"] = kToolVersion;
  report["dims"] = rho.dims();
  report["system_index"] = s;
  report["provenance"] = file.provenance;
  report["config"] = {{"optimizer", to_json(cfg.optimizer)},
                      {"qd_delta", cfg.tolerances.qd_delta},
                      {"sbs_tolerance", cfg.tolerances.sbs},
                      {"strong_qd",
                       {{"chi", cfg.tolerances.strong_qd.chi},
                        {"acc", cfg.tolerances.strong_qd.acc},
                        {"indep", cfg.tolerances.strong_qd.indep}}}};
  if (checks.sbs) {
    report["sbs"] = guarded([&] {
      SbsCheckOptions opt;
      opt.tolerance = cfg.tolerances.sbs;
      return to_json(check_sbs(rho, s, opt));
    });
  }
  if (checks.strong_qd)
    report["strong_qd"] = guarded([&] { return to_json(strong_qd_check(rho, s, cfg.optimizer, cfg.tolerances.strong_qd)); });
  if (checks.qd) {
    report["qd"] = guarded([&] {
      QdOptions opt;
      opt.optimizer = cfg.optimizer;
      return to_json(qd_condition_check(rho, s, cfg.tolerances.qd_delta, opt));
    });
  }
  if (checks.measures) report["measures"] = guarded([&] { return to_json(measures_report(rho, s, cfg.optimizer)); });
  return report;
}

}  // namespace qobj::harness
