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


#include "optimizer.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace qobj::detail {
namespace {

// Plastic number; (1/g, 1/g^2) generates the R2 low-discrepancy sequence.
constexpr double kPlastic = 1.32471795724474602596;
constexpr int kLineSearchSteps = 20;
constexpr double kConvergedGain = 1e-12;
// Initial refinement bracket (radians). Independent of grid size so that two
// grids sharing their best cell refine identically.
constexpr double kInitialBracket = 0.3;

Eigen::Matrix3d seeded_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Quaterniond q(normal(rng), normal(rng), normal(rng), normal(rng));
  q.normalize();
  return q.toRotationMatrix();
}

std::pair<Direction, Direction> tangent_frame(const Direction& n) {
  const Direction helper = std::abs(n.x()) < 0.9 ? Direction::UnitX() : Direction::UnitY();
  Direction e1 = (helper - helper.dot(n) * n).normalized();
  Direction e2 = n.cross(e1);
  return {e1, e2};
}

// Golden-section maximization of g over [-h, h]; returns the best abscissa
// seen (0 if nothing beats g(0) = current).
double golden_line(const std::function<double(double)>& g, double h, double current, double& best_value,
                   std::size_t& evaluations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = -h, hi = h;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  evaluations += 2;
  double best_x = 0.0;
  best_value = current;
  auto consider = [&](double x, double fx) {
    if (fx > best_value) {
      best_value = fx;
      best_x = x;
    }
  };
  consider(x1, f1);
  consider(x2, f2);
  for (int it = 0; it < kLineSearchSteps; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = g(x2);
      consider(x2, f2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = g(x1);
      consider(x1, f1);
    }
    ++evaluations;
  }
  return best_x;
}

// One coordinate sweep over the tangent plane at `n`; updates n and value.
void refine_direction(const std::function<double(const Direction&)>& f, Direction& n, double& value,
                      double h, std::size_t& evaluations) {
  for (int axis = 0; axis < 2; ++axis) {
    const auto [e1, e2] = tangent_frame(n);
    const Direction e = axis == 0 ? e1 : e2;
    const Direction base = n;
    auto line = [&](double s) { return f((base + s * e).normalized()); };
    double best = value;
    const double s = golden_line(line, h, value, best, evaluations);
    if (best > value) {
      value = best;
      n = (base + s * e).normalized();
    }
  }
}

}  // namespace

std::vector<Direction> hemisphere_grid(int count, std::uint64_t seed) {
  const Eigen::Matrix3d rot = seeded_rotation(seed);
  const double a1 = 1.0 / kPlastic;
  const double a2 = 1.0 / (kPlastic * kPlastic);
  std::vector<Direction> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    double u = 0.5 + a1 * i;
    double v = 0.5 + a2 * i;
    u -= std::floor(u);
    v -= std::floor(v);
    // Uniform in z on [0,1) is uniform in area on the upper hemisphere.
    const double z = u;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = 2.0 * std::numbers::pi * v;
    points.push_back(rot * Direction(r * std::cos(phi), r * std::sin(phi), z));
  }
  return points;
}

SphereMax maximize_on_sphere(const std::function<double(const Direction&)>& objective,
                             const OptimizerConfig& cfg) {
  cfg.validate();
  const auto grid = hemisphere_grid(cfg.grid_points, cfg.seed);
  SphereMax out;
  out.value = -std::numeric_limits<double>::infinity();
  for (const auto& n : grid) {
    const double v = objective(n);
    ++out.evaluations;
    if (v > out.value) {  // strict: lowest index wins ties
      out.value = v;
      out.best = n;
    }
  }
  double h = kInitialBracket;
  double gain = 0.0;
  for (int round = 0; round < cfg.refine_iters; ++round) {
    const double before = out.value;
    refine_direction(objective, out.best, out.value, h, out.evaluations);
    gain = out.value - before;
    h *= 0.5;
  }
  out.converged = cfg.refine_iters > 0 && gain < kConvergedGain;
  return out;
}

SpherePairMax maximize_on_sphere_pair(
    const std::function<double(const Direction&, const Direction&)>& objective,
    const OptimizerConfig& cfg) {
  cfg.validate();
  const auto grid_a = hemisphere_grid(cfg.grid_points, cfg.seed);
  const auto grid_b = hemisphere_grid(cfg.grid_points, cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  SpherePairMax out;
  out.value = -std::numeric_limits<double>::infinity();
  for (const auto& a : grid_a) {
    for (const auto& b : grid_b) {
      const double v = objective(a, b);
      ++out.evaluations;
      if (v > out.value) {
        out.value = v;
        out.a = a;
        out.b = b;
      }
    }
  }
  double h = kInitialBracket;
  double gain = 0.0;
  for (int round = 0; round < cfg.refine_iters; ++round) {
    const double before = out.value;
    const Direction b_fixed = out.b;
    refine_direction([&](const Direction& a) { return objective(a, b_fixed); }, out.a, out.value, h,
                     out.evaluations);
    const Direction a_fixed = out.a;
    refine_direction([&](const Direction& b) { return objective(a_fixed, b); }, out.b, out.value, h,
                     out.evaluations);
    gain = out.value - before;
    h *= 0.5;
  }
  out.converged = cfg.refine_iters > 0 && gain < kConvergedGain;
  return out;
}

}  // namespace qobj::detail
