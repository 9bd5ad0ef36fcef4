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
#include <functional>
#include <random>

#include "qobj/info_measures.hpp"

namespace qobj {
namespace {

constexpr std::size_t kMaxExhaustiveEnvironments = 12;

void for_each_combination(const IndexSet& pool, std::size_t k, const std::function<void(const IndexSet&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  const std::size_t n = pool.size();
  while (true) {
    IndexSet subset;
    for (auto i : idx) subset.push_back(pool[i]);
    fn(subset);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double binomial(std::size_t n, std::size_t k) {
  return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

std::vector<IndexSet> fraction_subsets(const IndexSet& envs, std::size_t k, const QdOptions& opt,
                                       std::mt19937_64& rng) {
  std::vector<IndexSet> out;
  switch (opt.convention) {
    case FractionConvention::prefix:
      out.emplace_back(envs.begin(), envs.begin() + static_cast<std::ptrdiff_t>(k));
      break;
    case FractionConvention::average_exhaustive:
      if (envs.size() > kMaxExhaustiveEnvironments) {
        throw InvalidArgument("qd_condition_check: exhaustive averaging limited to N <= 12 environments");
      }
      for_each_combination(envs, k, [&](const IndexSet& s) { out.push_back(s); });
      break;
    case FractionConvention::average_sampled:
      if (binomial(envs.size(), k) <= static_cast<double>(opt.sample_count)) {
        for_each_combination(envs, k, [&](const IndexSet& s) { out.push_back(s); });
      } else {
        for (std::size_t draw = 0; draw < opt.sample_count; ++draw) {
          IndexSet pool = envs;
          std::shuffle(pool.begin(), pool.end(), rng);
          IndexSet subset(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
          std::sort(subset.begin(), subset.end());
          out.push_back(std::move(subset));
        }
      }
      break;
  }
  return out;
}

}  // namespace

QdReport qd_condition_check(const DensityMatrix& rho, std::size_t system_index, double delta,
                            const QdOptions& options) {
  if (!(delta >= 0.0 && delta < 1.0)) throw InvalidArgument("qd_condition_check: delta must lie in [0, 1)");
  if (system_index >= rho.subsystems()) throw InvalidArgument("qd_condition_check: system out of range");
  const IndexSet envs = complement(rho.subsystems(), {system_index});
  if (envs.empty()) throw InvalidArgument("qd_condition_check: no environment");

  QdReport report;
  report.delta = delta;
  report.convention = options.convention;
  report.H_S = von_neumann_entropy(partial_trace(rho, {system_index}));

  std::mt19937_64 rng(options.seed);
  const double n = static_cast<double>(envs.size());
  for (std::size_t k = 1; k <= envs.size(); ++k) {
    const auto subsets = fraction_subsets(envs, k, options, rng);
    double info = 0.0, chi = 0.0;
    for (const auto& subset : subsets) {
      IndexSet keep{system_index};
      keep.insert(keep.end(), subset.begin(), subset.end());
      const DensityMatrix reduced = partial_trace(rho, keep);
      // partial_trace keeps original order; locate S inside the reduction.
      const std::size_t s_pos = static_cast<std::size_t>(
          std::count_if(subset.begin(), subset.end(), [&](std::size_t i) { return i < system_index; }));
      const IndexSet rest = complement(reduced.subsystems(), {s_pos});
      info += mutual_information(reduced, {s_pos}, rest);
      if (options.with_optimizers) chi += holevo_quantity(reduced, s_pos, options.optimizer).value;
    }
    const double count = static_cast<double>(subsets.size());
    QdFractionRow row;
    row.size = k;
    row.f = static_cast<double>(k) / n;
    row.I = info / count;
    row.passes = (1.0 - delta) * report.H_S - options.tol <= row.I && row.I <= report.H_S + options.tol;
    if (options.with_optimizers) {
      row.chi = chi / count;
      row.discord = row.I - *row.chi;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace qobj
