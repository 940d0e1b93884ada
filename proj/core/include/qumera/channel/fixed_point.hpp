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

#include <optional>

#include "qumera/channel/ansatz.hpp"

namespace qumera::channel {

enum class FixedPointMethod {
  kAuto,    // power iteration, Krylov once the residual decay stalls
  kPower,
  kKrylov,  // restarted Arnoldi from the start
};

struct FixedPointOptions {
  double tol = 1e-10;       // on ||Phi(rho) - rho||_F
  int max_iter = 20000;     // descend applications
  FixedPointMethod method = FixedPointMethod::kAuto;
  int krylov_dim = 24;
  // Stall rule for kAuto: residual ratio above stall_ratio for stall_window steps.
  double stall_ratio = 0.99;
  int stall_window = 50;
};

struct FixedPointResult {
  DensityMatrix3 rho;
  double residual = 0.0;
  int iterations = 0;              // descend applications spent
  bool used_krylov = false;
  bool degenerate_warning = false; // two Ritz values within 1e-8 of modulus 1
};

// Unit-eigenvalue eigenvector of descend, Hermitian with unit trace. Starts
// from `guess` when given, else from the maximally mixed state. Throws
// ConvergenceError (carrying the residual) after max_iter applications.
FixedPointResult fixed_point(const MeraAnsatz& ansatz, const std::optional<DensityMatrix3>& guess,
                             const FixedPointOptions& options = {});

}  // namespace qumera::channel
