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

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "qumera/channel/spectrum.hpp"
#include "qumera/error.hpp"
#include "test_util.hpp"

namespace qumera::channel {
namespace {

std::vector<double> moduli(const std::vector<Complex>& values) {
  std::vector<double> out;
  for (const auto& v : values) out.push_back(std::abs(v));
  return out;
}

// Eigen's general complex eigensolver, independent of the LAPACK path.
std::vector<double> eigen_moduli(const RowMatrix& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(std::abs(es.eigenvalues()(i)));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

TEST(Spectrum, DenseMatchesIndependentEigensolver) {
  tensnet::Rng rng(1);
  const auto a = MeraAnsatz::random(2, 1, rng);
  const auto phi = materialize(a);
  const auto got = moduli(dense_eigenvalues(phi.matrix));
  const auto want = eigen_moduli(phi.matrix);
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-10);
}

TEST(Spectrum, ArnoldiTopEightMatchesDense) {
  tensnet::Rng rng(2);
  for (int trial = 0; trial < 3; ++trial) {
    const auto a = MeraAnsatz::random(2, 1, rng);
    SpectrumOptions dense, iterative;
    dense.method = SpectrumMethod::kDense;
    iterative.method = SpectrumMethod::kArnoldi;
    const auto d = moduli(spectrum(a, 8, dense));
    const auto k = moduli(spectrum(a, 8, iterative));
    ASSERT_EQ(k.size(), 8u);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(k[i], d[i], 1e-8) << "rank " << i + 1;
  }
}

TEST(Spectrum, LeadingModulusIsOne) {
  tensnet::Rng rng(3);
  for (std::size_t m : {2u, 3u}) {
    const auto a = MeraAnsatz::random(m, 1, rng);
    const auto values = spectrum(a, 4);
    EXPECT_NEAR(std::abs(values.front()), 1.0, 1e-10);
    EXPECT_TRUE(std::is_sorted(values.begin(), values.end(),
                               [](Complex x, Complex y) { return std::abs(x) > std::abs(y); }));
  }
}

TEST(Spectrum, TooManyEigenvaluesIsRejected) {
  tensnet::Rng rng(4);
  const auto a = MeraAnsatz::random(2, 1, rng);
  EXPECT_THROW(spectrum(a, 65), Error);
}

}  // namespace
}  // namespace qumera::channel
