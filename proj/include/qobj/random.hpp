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

#include <cstdint>
#include <random>

#include "qobj/density_matrix.hpp"

namespace qobj {

using Rng = std::mt19937_64;

/// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
CMatrix random_unitary(std::size_t d, Rng& rng);
/// Haar-random pure state vector.
CVector random_state_vector(std::size_t d, Rng& rng);
/// Ginibre-induced mixed state of the given rank (rank 0 means full rank).
DensityMatrix random_density_matrix(const Dims& dims, Rng& rng, std::size_t rank = 0);
DensityMatrix random_pure_state(const Dims& dims, Rng& rng);

}  // namespace qobj
