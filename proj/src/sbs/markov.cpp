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


#include <cmath>

#include "qobj/sbs.hpp"

namespace qobj {
namespace {

struct BlockShape {
  std::size_t ds, dl, dr, de2;
};

BlockShape shape_of(const MarkovBlock& b) {
  if (b.left.subsystems() < 1 || b.left.subsystems() > 2 || b.right.subsystems() < 1 || b.right.subsystems() > 2)
    throw InvalidArgument("build_markov_fixture: block factors have one or two subsystems");
  BlockShape s{};
  s.ds = b.left.dim_of(0);
  s.dl = b.left.subsystems() == 2 ? b.left.dim_of(1) : 1;
  s.dr = b.right.subsystems() == 2 ? b.right.dim_of(0) : 1;
  s.de2 = b.right.dims().back();
  return s;
}

}  // namespace

MarkovFixture build_markov_fixture(const std::vector<MarkovBlock>& blocks, double tol) {
  if (blocks.empty()) throw InvalidArgument("build_markov_fixture: no blocks");
  std::vector<BlockShape> shapes;
  double total = 0.0;
  std::size_t de = 0;
  for (const auto& b : blocks) {
    if (!(b.weight >= 0.0)) throw InvalidArgument("build_markov_fixture: negative block weight");
    total += b.weight;
    shapes.push_back(shape_of(b));
    if (shapes.back().ds != shapes.front().ds || shapes.back().de2 != shapes.front().de2)
      throw InvalidArgument("build_markov_fixture: inconsistent block dimensions");
    de += shapes.back().dl * shapes.back().dr;
  }
  if (std::abs(total - 1.0) > tol) throw InvariantError("probabilities", std::abs(total - 1.0), "block weights");
  if (de < 2) throw InvalidArgument("build_markov_fixture: environment E must have dimension >= 2");

  const std::size_t ds = shapes.front().ds, de2 = shapes.front().de2;
  const Dims dims{ds, de, de2};
  const std::size_t d = total_dimension(dims);
  if (d > kMaxTotalDim) throw DimensionGuardError(d, kMaxTotalDim, "build_markov_fixture");

  std::vector<CMatrix> projectors;
  CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  auto flat = [&](std::size_t s, std::size_t e, std::size_t e2) {
    return static_cast<Eigen::Index>((s * de + e) * de2 + e2);
  };

  std::size_t offset = 0;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const auto& sh = shapes[j];
    const CMatrix& left = blocks[j].left.matrix();    // (s, l) row-major
    const CMatrix& right = blocks[j].right.matrix();  // (r, e2) row-major
    for (std::size_t s = 0; s < ds; ++s)
      for (std::size_t l = 0; l < sh.dl; ++l)
        for (std::size_t r = 0; r < sh.dr; ++r)
          for (std::size_t e2 = 0; e2 < de2; ++e2)
            for (std::size_t s_ = 0; s_ < ds; ++s_)
              for (std::size_t l_ = 0; l_ < sh.dl; ++l_)
                for (std::size_t r_ = 0; r_ < sh.dr; ++r_)
                  for (std::size_t e2_ = 0; e2_ < de2; ++e2_) {
                    const cplx a = left(static_cast<Eigen::Index>(s * sh.dl + l), static_cast<Eigen::Index>(s_ * sh.dl + l_));
                    const cplx b = right(static_cast<Eigen::Index>(r * de2 + e2), static_cast<Eigen::Index>(r_ * de2 + e2_));
                    m(flat(s, offset + l * sh.dr + r, e2), flat(s_, offset + l_ * sh.dr + r_, e2_)) += blocks[j].weight * a * b;
                  }
    CMatrix proj = CMatrix::Zero(static_cast<Eigen::Index>(de), static_cast<Eigen::Index>(de));
    for (std::size_t i = 0; i < sh.dl * sh.dr; ++i)
      proj(static_cast<Eigen::Index>(offset + i), static_cast<Eigen::Index>(offset + i)) = 1.0;
    projectors.push_back(std::move(proj));
    offset += sh.dl * sh.dr;
  }
  return MarkovFixture{DensityMatrix::assume_valid(0.5 * (m + m.adjoint()), dims, tol), std::move(projectors)};
}

}  // namespace qobj
