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


#include <bit>
#include <cmath>
#include <vector>

#include "qobj/linalg.hpp"
#include "qobj/spin_model.hpp"

namespace qobj {
namespace {

constexpr std::size_t kMaxFullSpins = 14;

// Real 2x2 branch-plus state 1/2 [[1 + w, u], [u, 1 - w]] of one spin in its
// frame; the minus branch flips the sign of u.
struct SpinFrame {
  double w;
  double u;
};

SpinFrame frame_of(const Eigen::Vector3d& rp, const Eigen::Vector3d& rm) {
  const Eigen::Vector3d sum = rp + rm;
  Eigen::Vector3d e3;
  if (sum.norm() > 1e-14) {
    e3 = sum.normalized();
  } else if (rp.norm() > 1e-14) {
    e3 = rp.unitOrthogonal();
  } else {
    e3 = Eigen::Vector3d::UnitZ();
  }
  const Eigen::Vector3d perp = rp - rp.dot(e3) * e3;
  return {rp.dot(e3), perp.norm()};
}

// Kronecker product of the 2x2 frames of `spins`, row-major, dimension 2^|spins|.
std::vector<double> kron_table(const std::vector<SpinFrame>& spins) {
  std::vector<double> t{1.0};
  std::size_t d = 1;
  for (const auto& s : spins) {
    const double a[2][2] = {{0.5 * (1 + s.w), 0.5 * s.u}, {0.5 * s.u, 0.5 * (1 - s.w)}};
    std::vector<double> next(4 * d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t x = 0; x < 2; ++x)
          for (std::size_t y = 0; y < 2; ++y) next[(2 * i + x) * (2 * d) + (2 * j + y)] = t[i * d + j] * a[x][y];
    t = std::move(next);
    d *= 2;
  }
  return t;
}

}  // namespace

double environment_fraction_entropy(const SpinSpinModel& model, const IndexSet& observed) {
  model.validate();
  const std::size_t n = observed.size();
  if (n == 0) return 0.0;
  for (auto k : observed)
    if (k >= model.environments()) throw InvalidArgument("environment_fraction_entropy: index out of range");

  const double ap = model.alpha_plus(), am = model.alpha_minus();
  const bool balanced = std::abs(ap - am) <= 1e-15;
  const std::size_t limit = balanced ? kMaxObservedSpins : kMaxFullSpins;
  if (n > limit)
    throw DimensionGuardError(std::size_t{1} << n, std::size_t{1} << limit,
                              "environment_fraction_entropy: observed fraction too large");

  const Eigen::Vector3d r0 = env_bloch_vector(model);
  std::vector<SpinFrame> frames;
  for (auto k : observed) {
    const double phi = model.couplings[k] * model.time;
    const Eigen::Vector3d rp = Eigen::AngleAxisd(phi, Eigen::Vector3d::UnitZ()) * r0;
    const Eigen::Vector3d rm = Eigen::AngleAxisd(-phi, Eigen::Vector3d::UnitZ()) * r0;
    frames.push_back(frame_of(rp, rm));
  }

  // Entry (s, s') = hi(s_hi, s'_hi) lo(s_lo, s'_lo) times 1 for equal parity
  // of s and s' and (alpha_+ - alpha_-) otherwise.
  const std::size_t nh = n / 2, nl = n - nh;
  const std::vector<double> hi = kron_table({frames.begin(), frames.begin() + static_cast<std::ptrdiff_t>(nh)});
  const std::vector<double> lo = kron_table({frames.begin() + static_cast<std::ptrdiff_t>(nh), frames.end()});
  const std::size_t dh = std::size_t{1} << nh, dl = std::size_t{1} << nl;
  auto entry = [&](std::size_t s, std::size_t t) {
    return hi[(s >> nl) * dh + (t >> nl)] * lo[(s & (dl - 1)) * dl + (t & (dl - 1))];
  };
  auto parity = [](std::size_t s) { return std::popcount(s) & 1; };

  std::vector<double> eigenvalues;
  auto diagonalize = [&](const std::vector<std::size_t>& idx, double cross) {
    const std::size_t m = idx.size();
    std::vector<double> packed(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        const double v = entry(idx[i], idx[j]);
        packed[i * m + j] = parity(idx[i]) == parity(idx[j]) ? v : cross * v;
      }
    const auto w = linalg::symmetric_eigenvalues(packed, m);
    eigenvalues.insert(eigenvalues.end(), w.begin(), w.end());
  };

  const std::size_t d = std::size_t{1} << n;
  if (balanced) {
    std::vector<std::size_t> even, odd;
    for (std::size_t s = 0; s < d; ++s) (parity(s) ? odd : even).push_back(s);
    diagonalize(even, 0.0);
    diagonalize(odd, 0.0);
  } else {
    std::vector<std::size_t> all(d);
    for (std::size_t s = 0; s < d; ++s) all[s] = s;
    diagonalize(all, ap - am);
  }
  return entropy_from_eigenvalues(eigenvalues);
}

}  // namespace qobj
