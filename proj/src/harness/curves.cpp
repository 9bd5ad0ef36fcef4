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
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "qobj/harness.hpp"

namespace qobj::harness {
namespace {

std::vector<IndexSet> split_macrofractions(const IndexSet& observed, std::size_t count) {
  std::vector<IndexSet> macs;
  if (observed.empty()) return macs;
  const std::size_t parts = std::min(count, observed.size());
  std::size_t start = 0;
  for (std::size_t p = 0; p < parts; ++p) {
    const std::size_t len = (observed.size() - start) / (parts - p);
    macs.emplace_back(observed.begin() + static_cast<std::ptrdiff_t>(start),
                      observed.begin() + static_cast<std::ptrdiff_t>(start + len));
    start += len;
  }
  return macs;
}

std::size_t fraction_size(std::size_t n, double f) { return prefix_fraction(n, f).size(); }

void combinations(std::size_t n, std::size_t k, std::vector<IndexSet>& out) {
  IndexSet idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<IndexSet> fraction_sets(const ExperimentConfig& cfg, std::size_t k, std::size_t cell) {
  std::vector<IndexSet> sets;
  switch (cfg.convention) {
    case FractionConvention::prefix:
      sets.push_back(prefix_fraction(cfg.n, static_cast<double>(k) / static_cast<double>(cfg.n)));
      break;
    case FractionConvention::average_exhaustive:
      combinations(cfg.n, k, sets);
      break;
    case FractionConvention::average_sampled: {
      // Seeded per cell so results do not depend on scheduling.
      std::mt19937_64 rng(*cfg.seed ^ (0x9e3779b97f4a7c15ULL * (cell + 1)));
      IndexSet pool(cfg.n);
      for (std::size_t i = 0; i < cfg.n; ++i) pool[i] = i;
      for (std::size_t s = 0; s < cfg.sample_count; ++s) {
        std::shuffle(pool.begin(), pool.end(), rng);
        IndexSet subset(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
        std::sort(subset.begin(), subset.end());
        sets.push_back(std::move(subset));
      }
      break;
    }
  }
  return sets;
}

FractionResult evaluate_cell(const ExperimentConfig& cfg, const SpinSpinModel& model, double f, std::size_t cell,
                             bool with_information) {
  const std::size_t k = fraction_size(cfg.n, f);
  const auto sets = fraction_sets(cfg, k, cell);
  FractionResult avg;
  double info = 0.0;
  for (const auto& observed : sets) {
    const auto macs = split_macrofractions(observed, cfg.macrofractions);
    const FractionResult r = with_information ? mutual_information_SfE(model, observed, macs)
                                              : sbs_bound_fraction(model, observed, macs);
    avg.H_S = r.H_S;
    avg.epsilon += r.epsilon;
    avg.gamma_abs += r.gamma_abs;
    avg.fid_mac += r.fid_mac;
    if (r.I_SfE) info += *r.I_SfE;
  }
  const double count = static_cast<double>(sets.size());
  avg.f = f;
  avg.epsilon /= count;
  avg.gamma_abs /= count;
  avg.fid_mac /= count;
  if (with_information) avg.I_SfE = info / count;
  return avg;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
}

}  // namespace

std::vector<CurveRow> run_sweep(const ExperimentConfig& cfg, bool with_information) {
  cfg.validate();
  const auto grid = cfg.resolved_f_grid();
  if (with_information) {
    const std::size_t kmax = fraction_size(cfg.n, grid.back());
    const bool balanced = std::abs(cfg.system_state(0, 0).real() - cfg.system_state(1, 1).real()) <= 1e-15;
    const std::size_t limit = balanced ? kMaxObservedSpins : kMaxObservedSpins - 1;
    if (kmax > limit) {
      throw DimensionGuardError(std::size_t{1} << std::min<std::size_t>(kmax, 63), std::size_t{1} << limit,
                                "mutual information needs H(rho_fE) for |fE| = " + std::to_string(kmax) +
                                    " observed spins; the limit is " + std::to_string(limit) +
                                    " (use sbs-bound or a smaller f_grid)");
    }
  }

  SpinSpinModel base;
  base.couplings = cfg.resolved_couplings();
  base.system_state = cfg.system_state;
  base.env_lambda = cfg.lambda;
  base.euler = cfg.euler;

  const std::size_t cells = cfg.times.size() * grid.size();
  std::vector<CurveRow> rows(cells);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t c = next++; c < cells; c = next++) {
      try {
        SpinSpinModel model = base;
        model.time = cfg.times[c / grid.size()];
        rows[c] = {model.time, evaluate_cell(cfg, model, grid[c % grid.size()], c, with_information)};
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = cells;
      }
    }
  };
  const std::size_t threads = std::min(cfg.jobs, cells);
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) throw NumericalError("non-finite value in output");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string curve_csv(const std::vector<CurveRow>& rows, double t, bool with_information) {
  std::ostringstream out;
  out << (with_information ? "f,I_bits,H_S_bits,epsilon,gamma_abs,fid_mac\n" : "f,H_S_bits,epsilon,gamma_abs,fid_mac\n");
  for (const auto& row : rows) {
    if (row.t != t) continue;
    const auto& r = row.result;
    out << format_double(r.f);
    if (with_information) out << ',' << format_double(*r.I_SfE);
    out << ',' << format_double(r.H_S) << ',' << format_double(r.epsilon) << ',' << format_double(r.gamma_abs) << ','
        << format_double(r.fid_mac) << '\n';
  }
  return out.str();
}

std::vector<std::filesystem::path> write_sweep(const ExperimentConfig& cfg, const std::vector<CurveRow>& rows,
                                               bool with_information, const std::string& stem) {
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  const std::string fp = fingerprint(cfg);
  std::vector<std::filesystem::path> written;

  json meta;
  meta["tool_version"] = kToolVersion;
  meta["fingerprint"] = fp;
  meta["command"] = stem;
  meta["config"] = physics_json(cfg);

  if (cfg.format == "csv") {
    json files = json::array();
    for (std::size_t i = 0; i < cfg.times.size(); ++i) {
      const auto path = dir / (stem + "_t" + std::to_string(i) + ".csv");
      write_text(path, curve_csv(rows, cfg.times[i], with_information));
      files.push_back({{"file", path.filename().string()}, {"t", cfg.times[i]}});
      written.push_back(path);
    }
    meta["files"] = files;
    const auto path = dir / (stem + ".meta.json");
    write_text(path, meta.dump(2) + "\n");
    written.push_back(path);
  } else if (cfg.format == "json") {
    json out_rows = json::array();
    for (const auto& row : rows) {
      const auto& r = row.result;
      json j = {{"t", row.t},
                {"f", r.f},
                {"H_S_bits", r.H_S},
                {"epsilon", r.epsilon},
                {"gamma_abs", r.gamma_abs},
                {"fid_mac", r.fid_mac},
                {"fingerprint", fp}};
      if (r.I_SfE) j["I_bits"] = *r.I_SfE;
      for (const auto& [key, value] : j.items())
        if (value.is_number_float()) format_double(value.get<double>());
      out_rows.push_back(j);
    }
    meta["rows"] = out_rows;
    const auto path = dir / (stem + ".json");
    write_text(path, meta.dump(2) + "\n");
    written.push_back(path);
  } else {
    const auto path = dir / (stem + ".svg");
    write_text(path, curve_svg(rows, with_information, stem + " (fingerprint " + fp + ")"));
    written.push_back(path);
  }
  return written;
}

}  // namespace qobj::harness
