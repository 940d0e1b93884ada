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
#include <string>
#include <string_view>

#include "qumera/channel/ansatz.hpp"

namespace qumera::models {

using channel::Operator3;
using channel::RowMatrix;

// H = -J/2 sum_j [ (1+gamma) X_j X_{j+1} + (1-gamma) Y_j Y_{j+1}
//                  + delta Z_j Z_{j+1} + 2 b_field Z_j ]
//
// Pauli matrices are the standard ones with eigenvalues +-1; the single-spin
// basis order is (up, down) = (|0>, |1>), Z = diag(1, -1). Multi-spin states
// are ordered with the leftmost spin most significant.
struct SpinModelParams {
  double J = 1.0;
  double gamma = 0.0;
  double delta = 0.0;
  double b_field = 0.0;

  void validate() const;  // J != 0, all finite
};

enum class PresetKind { kIsingCritical, kXxz };

// The two critical families. The XXZ preset uses J = -1: with the sign
// convention of H above this makes delta the antiferromagnetic anisotropy, the
// regime where the closed-form exponents in exact.hpp apply (delta = 1 is the
// antiferromagnetic Heisenberg point).
struct ModelPreset {
  PresetKind kind = PresetKind::kIsingCritical;
  SpinModelParams params;

  static ModelPreset ising_critical();
  static ModelPreset xxz(double delta);  // throws InvariantError if |delta| > 1
  // "ising" or "xxz:<delta>".
  static ModelPreset parse(std::string_view name);

  std::string name() const;
  void validate() const;
};

// Three-effective-site block h on sites of `blocking` spins each. Bonds inside
// the central block and field terms on its spins carry weight 1, the two bonds
// crossing its boundaries carry 1/2, everything else 0, so the translates of h
// sum to H exactly. blocking must be 1 or 2.
Operator3 build_local_h(const SpinModelParams& params, int blocking);

// Dense H on a periodic ring of `spins` spins (at most 12).
RowMatrix dense_hamiltonian(const SpinModelParams& params, std::size_t spins);

}  // namespace qumera::models
