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

#include <cstddef>
#include <vector>

namespace qobj::linalg {

/// Eigenvalues (ascending) of a dense real symmetric matrix stored row-major
/// in `packed` (n*n entries, only the lower triangle is read). The buffer is
/// released before the solve to cap peak memory at one dense copy.
std::vector<double> symmetric_eigenvalues(std::vector<double>& packed, std::size_t n);

}  // namespace qobj::linalg
