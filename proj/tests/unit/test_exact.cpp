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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qumera/error.hpp"
#include "qumera/models/exact.hpp"

namespace qumera::models {
namespace {

constexpr double kPi = std::numbers::pi;

// Midpoint rule on the Jordan-Wigner dispersion.
double midpoint_energy(const SpinModelParams& p, int n = 400000) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double k = 2 * kPi * (i + 0.5) / n;
    sum += std::hypot(p.b_field - std::cos(k), p.gamma * std::sin(k));
  }
  return -std::abs(p.J) * sum / n;
}

TEST(ExactExponents, Ising) {
  const auto ref = exact_exponents(ModelPreset::ising_critical());
  EXPECT_DOUBLE_EQ(*ref.nu('x'), 0.25);
  EXPECT_DOUBLE_EQ(*ref.nu('z'), 2.0);
  EXPECT_DOUBLE_EQ(*ref.nu('y'), 2.25);
}

TEST(ExactExponents, XxzClosedForm) {
  const auto xx = exact_exponents(ModelPreset::xxz(0.0));
  EXPECT_NEAR(*xx.nu('x'), 0.5, 1e-15);
  EXPECT_NEAR(*xx.nu('y'), 0.5, 1e-15);
  EXPECT_NEAR(*xx.nu('z'), 2.0, 1e-15);
  const auto half = exact_exponents(ModelPreset::xxz(0.5));
  EXPECT_NEAR(*half.nu('x'), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(*half.nu('y'), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(*half.nu('z'), 1.5, 1e-15);
  for (std::size_t i = 1; i < half.exponents.size(); ++i) {
    EXPECT_LE(half.exponents[i - 1].nu, half.exponents[i].nu);
  }
}

TEST(ExactExponents, FerromagneticEndpointIsRejected) {
  ModelPreset p;
  p.kind = PresetKind::kXxz;
  p.params.J = -1.0;
  p.params.delta = -1.0;
  EXPECT_THROW(exact_exponents(p), InvariantError);
}

TEST(FreeFermion, IsingIsFourOverPi) {
  EXPECT_NEAR(free_fermion_energy(ModelPreset::ising_critical().params), -4.0 / kPi, 1e-12);
}

TEST(FreeFermion, MatchesMidpointRule) {
  SpinModelParams p;
  p.J = 1.4;
  p.gamma = 0.35;
  p.b_field = 0.6;
  EXPECT_NEAR(free_fermion_energy(p), midpoint_energy(p), 1e-9);
  EXPECT_NEAR(free_fermion_energy(ModelPreset::xxz(0.0).params), -2.0 / kPi, 1e-12);
}

TEST(ReferenceEnergy, IsingUsesTheIntegral) {
  const auto ref = reference_energy(ModelPreset::ising_critical());
  ASSERT_TRUE(ref.energy_per_spin);
  EXPECT_NEAR(*ref.energy_per_spin, -1.2732395447351628, 1e-12);
}

TEST(ReferenceEnergy, XxExtrapolationAgreesWithFreeFermions) {
  const auto ref = reference_energy(ModelPreset::xxz(0.0));
  ASSERT_TRUE(ref.energy_per_spin);
  EXPECT_NEAR(*ref.energy_per_spin, -2.0 / kPi, 1e-4);
  EXPECT_GT(ref.uncertainty, 0.0);
  EXPECT_LT(ref.uncertainty, 1e-4);
}

TEST(ReferenceEnergy, HeisenbergPointCarriesAnUncertainty) {
  const auto ext = ed_extrapolate(ModelPreset::xxz(1.0).params, 14);
  EXPECT_EQ(ext.sizes, (std::vector<std::size_t>{8, 10, 12, 14}));
  // H = 2 sum S.S here, and the Bethe ansatz gives 1/4 - ln 2 per bond.
  EXPECT_NEAR(ext.energy, 2 * (0.25 - std::log(2.0)), 5e-3);
  EXPECT_GT(ext.uncertainty, 0.0);
}

TEST(ReferenceEnergy, JsonCarriesExponentsAndEnergy) {
  const auto j = to_json(reference_energy(ModelPreset::ising_critical()));
  EXPECT_EQ(j.at("model"), "ising");
  EXPECT_EQ(j.at("exponents").size(), 3u);
  EXPECT_TRUE(j.at("energy").is_number());
}

}  // namespace
}  // namespace qumera::models
