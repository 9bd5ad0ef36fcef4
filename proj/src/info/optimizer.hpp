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


#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qobj/info_measures.hpp"

namespace qobj::detail {

using Direction = Eigen::Vector3d;

/// First `count` points of the nested hemisphere sequence, rotated by the
/// seed's SO(3) element.
std::vector<Direction> hemisphere_grid(int count, std::uint64_t seed);

struct SphereMax {
  Direction best;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

SphereMax maximize_on_sphere(const std::function<double(const Direction&)>& objective,
                             const OptimizerConfig& cfg);

struct SpherePairMax {
  Direction a;
  Direction b;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

SpherePairMax maximize_on_sphere_pair(
    const std::function<double(const Direction&, const Direction&)>& objective,
    const OptimizerConfig& cfg);

}  // namespace qobj::detail
