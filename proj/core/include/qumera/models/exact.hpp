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
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qumera/models/spin_model.hpp"

namespace qumera::models {

struct ExactExponent {
  char label = 'x';
  double nu = 0.0;
};

struct ExactReference {
  std::string model;
  std::vector<ExactExponent> exponents;  // sorted by increasing nu
  std::optional<double> energy_per_spin;
  double uncertainty = 0.0;
  std::string provenance;

  // Exponent for a label, or nullopt.
  std::optional<double> nu(char label) const;
};

// Closed-form exponents of the critical presets. Ising: x 1/4, z 2, y 9/4.
// XXZ: nu_x = nu_y = 1 - acos(delta)/pi, nu_z = 1/nu_x. Throws InvariantError
// when an exponent would not be positive (delta = -1).
ExactReference exact_exponents(const ModelPreset& preset);

// -(|J|/2pi) int_0^{2pi} sqrt((b - cos k)^2 + gamma^2 sin^2 k) dk, the
// Jordan-Wigner ground energy per spin, valid for delta = 0.
double free_fermion_energy(const SpinModelParams& params);

struct EnergyExtrapolation {
  std::vector<std::size_t> sizes;
  std::vector<double> per_spin;  // E_0(L) / L
  double energy = 0.0;           // quadratic fit in 1/L^2, evaluated at 0
  double uncertainty = 0.0;      // change when the smallest L is dropped
};

// Lanczos ground energies for even L in [8, max_L], extrapolated in 1/L^2.
EnergyExtrapolation ed_extrapolate(const SpinModelParams& params, std::size_t max_L = 16);

// Exponents plus the thermodynamic energy per spin: the free-fermion integral
// for the Ising preset, ED extrapolation for XXZ.
ExactReference reference_energy(const ModelPreset& preset, std::size_t ed_max_L = 16);

nlohmann::json to_json(const ExactReference& ref);

}  // namespace qumera::models
