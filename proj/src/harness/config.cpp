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


#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>

#include "qobj/harness.hpp"

namespace qobj::harness {
namespace {

const char* convention_name(FractionConvention c) {
  switch (c) {
    case FractionConvention::prefix: return "prefix";
    case FractionConvention::average_exhaustive: return "average_exhaustive";
    case FractionConvention::average_sampled: return "average_sampled";
  }
  return "prefix";
}

FractionConvention convention_from(const std::string& s) {
  if (s == "prefix") return FractionConvention::prefix;
  if (s == "average_exhaustive") return FractionConvention::average_exhaustive;
  if (s == "average_sampled") return FractionConvention::average_sampled;
  throw ValidationError("config: unknown fraction_convention '" + s + "'");
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ValidationError("config: " + where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ValidationError("config: unknown key '" + key + "' in " + where);
  }
}

template <typename T>
T get(const json& obj, const char* key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError("config: bad value for '" + std::string(key) + "' in " + where + ": " + e.what());
  }
}

json complex_matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

CMatrix complex_matrix_from(const json& rows, const std::string& where) {
  if (!rows.is_array() || rows.size() != 2) throw ValidationError("config: " + where + " must be a 2x2 matrix");
  CMatrix m(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 2) throw ValidationError("config: " + where + " must be a 2x2 matrix");
    for (std::size_t j = 0; j < 2; ++j) {
      const json& e = rows[i][j];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ValidationError("config: " + where + " entries are [re, im] pairs");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = cplx(e[0].get<double>(), e[1].get<double>());
    }
  }
  return m;
}

bool strictly_ascending(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  return true;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n == 0) throw ValidationError("config: N must be >= 1");
  if (couplings) {
    if (couplings->size() != n) throw ValidationError("config: couplings must have N entries");
    for (double g : *couplings)
      if (!std::isfinite(g)) throw ValidationError("config: couplings must be finite");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ValidationError("config: lambda must lie in [0, 1]");
  if (!std::isfinite(euler.alpha) || !std::isfinite(euler.beta) || !std::isfinite(euler.gamma))
    throw ValidationError("config: Euler angles must be finite");
  try {
    DensityMatrix(system_state, {2});
  } catch (const InvariantError& e) {
    throw ValidationError(std::string("config: system_state violates ") + e.invariant() + ": " + e.what());
  }
  if (times.empty() || !strictly_ascending(times)) throw ValidationError("config: times must be nonempty and ascending");
  for (double t : times)
    if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("config: times must be finite and >= 0");
  if (!strictly_ascending(f_grid)) throw ValidationError("config: f_grid must be ascending");
  for (double f : f_grid)
    if (!(f > 0.0 && f <= 1.0)) throw ValidationError("config: f_grid entries must lie in (0, 1]");
  if (macrofractions == 0) throw ValidationError("config: macrofractions must be >= 1");
  if (sample_count == 0) throw ValidationError("config: sample_count must be >= 1");
  if (convention == FractionConvention::average_sampled && !seed)
    throw ValidationError("config: --seed is required for average_sampled fractions");
  try {
    optimizer.validate();
  } catch (const InvalidArgument& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  if (!(tolerances.qd_delta >= 0.0 && tolerances.qd_delta < 1.0)) throw ValidationError("config: qd_delta must lie in [0, 1)");
  if (jobs == 0) throw ValidationError("config: jobs must be >= 1");
  if (format != "csv" && format != "json" && format != "svg") throw ValidationError("config: format must be csv, json or svg");
}

std::vector<double> ExperimentConfig::resolved_f_grid() const {
  if (!f_grid.empty()) return f_grid;
  std::vector<double> grid(n);
  for (std::size_t k = 0; k < n; ++k) grid[k] = static_cast<double>(k + 1) / static_cast<double>(n);
  return grid;
}

std::vector<double> ExperimentConfig::resolved_couplings() const {
  if (couplings) return *couplings;
  if (!seed) throw ValidationError("--seed is required: couplings are drawn at random when not given explicitly");
  return draw_couplings(n, *seed);
}

ExperimentConfig parse_config(const json& doc) {
  reject_unknown(doc, {"N", "couplings", "seed", "lambda", "euler", "system_state", "times", "f_grid",
                       "fraction_convention", "sample_count", "macrofractions", "optimizer", "tolerances", "jobs",
                       "out_dir", "format"},
                 "config");
  ExperimentConfig cfg;
  const std::string top = "config";
  if (doc.contains("N")) cfg.n = get<std::size_t>(doc, "N", top);
  if (doc.contains("couplings")) cfg.couplings = get<std::vector<double>>(doc, "couplings", top);
  if (doc.contains("seed")) cfg.seed = get<std::uint64_t>(doc, "seed", top);
  if (doc.contains("lambda")) cfg.lambda = get<double>(doc, "lambda", top);
  if (doc.contains("euler")) {
    const json& e = doc.at("euler");
    reject_unknown(e, {"alpha", "beta", "gamma"}, "euler");
    if (e.contains("alpha")) cfg.euler.alpha = get<double>(e, "alpha", "euler");
    if (e.contains("beta")) cfg.euler.beta = get<double>(e, "beta", "euler");
    if (e.contains("gamma")) cfg.euler.gamma = get<double>(e, "gamma", "euler");
  }
  if (doc.contains("system_state")) cfg.system_state = complex_matrix_from(doc.at("system_state"), "system_state");
  if (doc.contains("times")) cfg.times = get<std::vector<double>>(doc, "times", top);
  if (doc.contains("f_grid")) cfg.f_grid = get<std::vector<double>>(doc, "f_grid", top);
  if (doc.contains("fraction_convention"))
    cfg.convention = convention_from(get<std::string>(doc, "fraction_convention", top));
  if (doc.contains("sample_count")) cfg.sample_count = get<std::size_t>(doc, "sample_count", top);
  if (doc.contains("macrofractions")) cfg.macrofractions = get<std::size_t>(doc, "macrofractions", top);
  if (doc.contains("optimizer")) {
    const json& o = doc.at("optimizer");
    reject_unknown(o, {"grid_points", "refine_iters", "seed"}, "optimizer");
    if (o.contains("grid_points")) cfg.optimizer.grid_points = get<int>(o, "grid_points", "optimizer");
    if (o.contains("refine_iters")) cfg.optimizer.refine_iters = get<int>(o, "refine_iters", "optimizer");
    if (o.contains("seed")) cfg.optimizer.seed = get<std::uint64_t>(o, "seed", "optimizer");
  }
  if (doc.contains("tolerances")) {
    const json& t = doc.at("tolerances");
    reject_unknown(t, {"qd_delta", "sbs", "strong_qd"}, "tolerances");
    if (t.contains("qd_delta")) cfg.tolerances.qd_delta = get<double>(t, "qd_delta", "tolerances");
    if (t.contains("sbs")) cfg.tolerances.sbs = get<double>(t, "sbs", "tolerances");
    if (t.contains("strong_qd")) {
      const json& s = t.at("strong_qd");
      reject_unknown(s, {"chi", "acc", "indep"}, "tolerances.strong_qd");
      if (s.contains("chi")) cfg.tolerances.strong_qd.chi = get<double>(s, "chi", "strong_qd");
      if (s.contains("acc")) cfg.tolerances.strong_qd.acc = get<double>(s, "acc", "strong_qd");
      if (s.contains("indep")) cfg.tolerances.strong_qd.indep = get<double>(s, "indep", "strong_qd");
    }
  }
  if (doc.contains("jobs")) cfg.jobs = get<std::size_t>(doc, "jobs", top);
  if (doc.contains("out_dir")) cfg.out_dir = get<std::string>(doc, "out_dir", top);
  if (doc.contains("format")) cfg.format = get<std::string>(doc, "format", top);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

json physics_json(const ExperimentConfig& cfg) {
  json j;
  j["N"] = cfg.n;
  j["couplings"] = cfg.resolved_couplings();
  j["seed"] = cfg.seed ? json(*cfg.seed) : json(nullptr);
  j["lambda"] = cfg.lambda;
  j["euler"] = {{"alpha", cfg.euler.alpha}, {"beta", cfg.euler.beta}, {"gamma", cfg.euler.gamma}};
  j["system_state"] = complex_matrix_json(cfg.system_state);
  j["times"] = cfg.times;
  j["f_grid"] = cfg.resolved_f_grid();
  j["fraction_convention"] = convention_name(cfg.convention);
  j["sample_count"] = cfg.sample_count;
  j["macrofractions"] = cfg.macrofractions;
  j["optimizer"] = to_json(cfg.optimizer);
  j["tolerances"] = {{"qd_delta", cfg.tolerances.qd_delta},
                     {"sbs", cfg.tolerances.sbs},
                     {"strong_qd",
                      {{"chi", cfg.tolerances.strong_qd.chi},
                       {"acc", cfg.tolerances.strong_qd.acc},
                       {"indep", cfg.tolerances.strong_qd.indep}}}};
  return j;
}

std::string fingerprint(const ExperimentConfig& cfg) {
  const std::string text = physics_json(cfg).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

json to_json(const OptimizerConfig& cfg) {
  return {{"grid_points", cfg.grid_points}, {"refine_iters", cfg.refine_iters}, {"seed", cfg.seed}};
}

}  // namespace qobj::harness
