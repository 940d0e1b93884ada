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

#include "qumera/channel/ansatz.hpp"

namespace qumera::channel {

// Raw maps on [k1 k2 k3 b1 b2 b3] tensors. No input validation; the solvers
// call these in their inner loops.
Tensor descend_raw(const Tensor& rho, const MeraAnsatz& ansatz);
Tensor ascend_raw(const Tensor& h, const MeraAnsatz& ansatz);

// Phi(rho): the three-site reduced state one layer further down.
DensityMatrix3 descend(const DensityMatrix3& rho, const MeraAnsatz& ansatz);

// Adjoint of descend: Tr[descend(rho) h] = Tr[rho ascend(h)].
Operator3 ascend(const Operator3& h, const MeraAnsatz& ansatz);

inline constexpr std::size_t kDefaultMaterializeCap = 4096;

// Phi in the elementary basis E_j = |i><k| with j the row-major flat index
// i * m^3 + k; column j holds the flattened descend(E_j).
struct SuperOperatorMatrix {
  std::size_t dim = 0;  // m^6
  RowMatrix matrix;
};

SuperOperatorMatrix materialize(const MeraAnsatz& ansatz, std::size_t cap = kDefaultMaterializeCap);

// Choi matrix sum_{ik} |i><k| (x) Phi(|i><k|); for checking complete positivity.
RowMatrix choi_matrix(const SuperOperatorMatrix& phi, std::size_t m);

struct Energy {
  double per_site = 0.0;  // Tr[rho* h] on effective sites
  double per_spin = 0.0;  // per_site / blocking
};

Energy energy(const MeraAnsatz& ansatz, const DensityMatrix3& rho_star, const Operator3& h);

}  // namespace qumera::channel
