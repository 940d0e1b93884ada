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

#include "qumera/opt/optimizer.hpp"

namespace qumera::opt {

struct DirectionCheck {
  std::size_t index = 0;
  double analytic = 0.0;   // <G, D> in the real inner product
  double numeric = 0.0;    // central difference of Tr[Phi(rho) h]
  double rel_err = 0.0;
};

struct GradcheckOptions {
  std::size_t directions = 20;
  double step = 1e-5;
  // Below this magnitude both derivatives count as zero (relative error 0).
  double zero_floor = 1e-9;
};

// Compares the linearized gradient against central finite differences along
// random unit directions. The tensor is perturbed without retraction, which is
// the function the gradient differentiates. Directions come from `rng`.
std::vector<DirectionCheck> gradient_check(const MeraAnsatz& ansatz, const DensityMatrix3& rho,
                                           const Operator3& h, Target target, tensnet::Rng& rng,
                                           const GradcheckOptions& options = {},
                                           const Tensor* gradient_override = nullptr);

}  // namespace qumera::opt
