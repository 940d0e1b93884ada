// Copyright 2026 The qumera Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "qumera/tensnet/rng.hpp"
#include "qumera/tensnet/tensor.hpp"

namespace qumera::tensnet {

// Relative singular-value floor below which a matrix counts as rank deficient.
inline constexpr double kRankTolerance = 1e-12;

// Isometry factor W of the polar decomposition M = W P, where M groups
// `row_legs` (in the given order) into rows and the remaining legs into
// columns. W has the shape of `a`. Requires rows >= cols and full column rank.
Tensor retract_isometry(const Tensor& a, const std::vector<std::size_t>& row_legs);

// Isometry factor of a rows x cols standard complex Gaussian matrix; returned
// as a rank-2 tensor.
Tensor random_isometry(std::size_t rows, std::size_t cols, Rng& rng);

// ||W^dagger W - I||_F for the matrix grouping the leading `row_legs` legs.
double isometry_defect(const Tensor& w, std::size_t row_legs);

// Projection of `g` onto the tangent space of the isometry manifold at `w`,
// with respect to the real inner product Re tr(A^dagger B):
//   g - w herm(w^dagger g).
Tensor project_tangent(const Tensor& w, const Tensor& g, std::size_t row_legs);

}  // namespace qumera::tensnet
