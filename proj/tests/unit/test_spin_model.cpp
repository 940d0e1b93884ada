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

#include "pauli.hpp"
#include "qumera/error.hpp"
#include "qumera/models/spin_model.hpp"

namespace qumera::models {
namespace {

using testing::embed_on_ring;
using testing::pauli_ring;

struct Case {
  SpinModelParams params;
  int blocking;
  std::size_t spins;
};

class Reconstruction : public ::testing::TestWithParam<Case> {};

TEST_P(Reconstruction, TranslatesOfLocalTermSumToTheRing) {
  const auto& c = GetParam();
  const Operator3 h = build_local_h(c.params, c.blocking);
  const auto b = static_cast<std::size_t>(c.blocking);
  const std::size_t blocks = c.spins / b;
  RowMatrix sum = RowMatrix::Zero(std::size_t{1} << c.spins, std::size_t{1} << c.spins);
  for (std::size_t j = 0; j < blocks; ++j) sum += embed_on_ring(h.matrix(), 3 * b, j * b, c.spins);
  const RowMatrix oracle = pauli_ring(c.params, c.spins);
  EXPECT_LE((sum - oracle).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LE((dense_hamiltonian(c.params, c.spins) - oracle).cwiseAbs().maxCoeff(), 1e-13);
}

SpinModelParams generic() {
  SpinModelParams p;
  p.J = 0.7;
  p.gamma = 0.3;
  p.delta = -0.4;
  p.b_field = 0.9;
  return p;
}

INSTANTIATE_TEST_SUITE_P(
    Models, Reconstruction,
    ::testing::Values(Case{ModelPreset::ising_critical().params, 1, 6}, Case{ModelPreset::ising_critical().params, 1, 8},
                      Case{ModelPreset::xxz(0.5).params, 1, 6}, Case{ModelPreset::xxz(0.5).params, 1, 8},
                      Case{generic(), 1, 6}, Case{generic(), 1, 8}, Case{generic(), 2, 8},
                      Case{ModelPreset::ising_critical().params, 2, 8}));

TEST(LocalH, IsingHasOnlyXxAndZTerms) {
  const auto p = ModelPreset::ising_critical().params;
  const Operator3 h = build_local_h(p, 1);
  const RowMatrix m = h.matrix();
  // Every entry connects states differing in zero or two adjacent spins.
  for (Eigen::Index r = 0; r < 8; ++r) {
    for (Eigen::Index c = 0; c < 8; ++c) {
      const auto flips = static_cast<unsigned>(r ^ c);
      if (flips != 0 && flips != 3 && flips != 6) {
        EXPECT_EQ(m(r, c), tensnet::Complex{0.0});
      }
    }
  }
  // |up up up>: half of each boundary ZZ is absent for gamma = 1, delta = 0;
  // only the central field term remains.
  EXPECT_NEAR(m(0, 0).real(), -p.J * p.b_field, 1e-15);
}

TEST(LocalH, PureExchangeIsHermitianAndTraceless) {
  SpinModelParams p;
  p.J = 1.3;
  p.gamma = 0.4;
  const RowMatrix m = build_local_h(p, 1).matrix();
  EXPECT_LE((m - m.adjoint()).norm(), 1e-14);
  EXPECT_NEAR(std::abs(m.trace()), 0.0, 1e-14);
}

TEST(ModelPreset, ParseAndValidate) {
  EXPECT_EQ(ModelPreset::parse("ising").kind, PresetKind::kIsingCritical);
  const auto x = ModelPreset::parse("xxz:0.5");
  EXPECT_EQ(x.kind, PresetKind::kXxz);
  EXPECT_DOUBLE_EQ(x.params.delta, 0.5);
  EXPECT_DOUBLE_EQ(x.params.J, -1.0);
  EXPECT_THROW(ModelPreset::parse("xxz:2"), InvariantError);
  EXPECT_THROW(ModelPreset::parse("xxz:abc"), InvariantError);
  EXPECT_THROW(ModelPreset::parse("heisenberg"), InvariantError);
}

TEST(SpinModelParams, ZeroCouplingIsRejected) {
  SpinModelParams p;
  p.J = 0.0;
  EXPECT_THROW(p.validate(), Error);
  EXPECT_THROW(build_local_h(ModelPreset::ising_critical().params, 3), Error);
}

}  // namespace
}  // namespace qumera::models
