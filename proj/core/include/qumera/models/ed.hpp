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

#include "qumera/models/spin_model.hpp"

namespace qumera::models {

inline constexpr std::size_t kMaxEdSites = 16;

struct CorrelatorRequest {
  char alpha = 'z';  // 'x', 'y' or 'z'
  std::size_t distance = 1;
};

struct Correlator {
  char alpha = 'z';
  std::size_t distance = 0;
  double connected = 0.0;  // <s_0 s_l> - <s_0><s_l>
};

struct EdResult {
  double ground_energy = 0.0;          // total, not per spin
  std::vector<double> ground_state;    // real amplitudes, 2^L entries
  std::vector<Correlator> correlators;
  int lanczos_steps = 0;
};

// Ground state of the periodic L-spin chain by Lanczos with full
// reorthogonalisation. The Hamiltonian is real in the Z basis, so the solver
// works in real arithmetic. L <= 16.
EdResult ed_oracle(const SpinModelParams& params, std::size_t L,
                   const std::vector<CorrelatorRequest>& observables = {});

}  // namespace qumera::models
