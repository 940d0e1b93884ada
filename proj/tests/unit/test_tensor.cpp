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
#include <limits>
#include <numeric>

#include "qumera/error.hpp"
#include "qumera/tensnet/isometry.hpp"
#include "naive_contract.hpp"
#include "test_util.hpp"

namespace qumera::tensnet {
namespace {

using testing::max_abs_diff;
using testing::random_tensor;

using testing::naive_contract;
using testing::random_case;

TEST(Contract, IdentityMatrixTimesVector) {
  Rng rng(1);
  const Tensor v = random_tensor({2}, rng);
  const Tensor out = contract(Tensor::identity({2}), v, {{{1, 0}}, {}});
  EXPECT_EQ(out.shape(), Shape{2});
  EXPECT_LE(max_abs_diff(out, v), 0.0);
}

TEST(Contract, RandomCubesMatchNaiveLoop) {
  Rng rng(2);
  const Tensor a = random_tensor({2, 2, 2}, rng), b = random_tensor({2, 2, 2}, rng);
  const ContractionSpec spec{{{2, 0}, {0, 1}}, {1, 0}};
  const Tensor fast = contract(a, b, spec), slow = naive_contract(a, b, spec);
  ASSERT_EQ(fast.shape(), slow.shape());
  EXPECT_LE(max_abs_diff(fast, slow), 1e-13);
}

TEST(Contract, PropertyRandomSpecsMatchNaiveLoop) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto c = random_case(rng);
    const Tensor fast = contract(c.a, c.b, c.spec), slow = naive_contract(c.a, c.b, c.spec);
    ASSERT_EQ(fast.shape(), slow.shape()) << "trial " << trial;
    const double scale = std::max(slow.norm(), 1e-300);
    EXPECT_LE((fast - slow).norm() / scale, 1e-13) << "trial " << trial;
  }
}

TEST(Contract, Linearity) {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = random_case(rng);
    const Tensor a2 = random_tensor(c.a.shape(), rng);
    const Complex alpha = rng.complex_normal(), beta = rng.complex_normal();
    const Tensor lhs = contract(c.a * alpha + a2 * beta, c.b, c.spec);
    const Tensor rhs = contract(c.a, c.b, c.spec) * alpha + contract(a2, c.b, c.spec) * beta;
    EXPECT_LE((lhs - rhs).norm(), 1e-13 * std::max(1.0, rhs.norm()));
  }
}

TEST(Contract, UnitaryTimesAdjointIsIdentity) {
  Rng rng(5);
  const Tensor u = random_isometry(4, 4, rng).reshaped({2, 2, 2, 2});
  // sum_{kl} u[i j k l] conj(u[I J k l]) = delta
  const Tensor out = contract(u, u.conj(), {{{2, 2}, {3, 3}}, {}});
  EXPECT_LE(max_abs_diff(out, Tensor::identity({2, 2})), 1e-13);
}

TEST(Contract, DimensionMismatchNamesThePair) {
  const Tensor a({2, 3}), b({2, 2});
  try {
    contract(a, b, {{{1, 0}}, {}});
    FAIL() << "expected SpecError";
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,0)"), std::string::npos) << e.what();
  }
}

TEST(Contract, RepeatedIndexIsRejected) {
  const Tensor a({2, 2}), b({2, 2});
  EXPECT_THROW(contract(a, b, {{{0, 0}, {0, 1}}, {}}), SpecError);
  EXPECT_THROW(contract(a, b, {{{0, 0}}, {0, 0}}), SpecError);
}

TEST(Contract, NonFiniteResultIsRejected) {
  Tensor a({2});
  a[0] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(contract(a, Tensor::identity({2}), {{{0, 0}}, {}}), InvariantError);
}

TEST(Permute, IdentityIsNoOp) {
  Rng rng(6);
  const Tensor a = random_tensor({2, 3, 4}, rng);
  EXPECT_EQ(permute(a, {0, 1, 2}), a);
}

TEST(Permute, InverseRecoversOriginal) {
  Rng rng(7);
  const Tensor a = random_tensor({2, 3, 4, 5}, rng);
  const Tensor p = permute(a, {2, 0, 3, 1});
  // p leg i = a leg order[i]; the inverse of (2 0 3 1) is (1 3 0 2).
  EXPECT_EQ(permute(p, {1, 3, 0, 2}), a);
}

TEST(Permute, TransposeOfMatrix) {
  Rng rng(8);
  const Tensor a = random_tensor({2, 3}, rng);
  const Tensor t = permute(a, {1, 0});
  ASSERT_EQ(t.shape(), (Shape{3, 2}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(t.at({j, i}), a.at({i, j}));
}

TEST(Permute, PreservesNormExactly) {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor a = random_tensor({2, 3, 2, 3}, rng);
    const Tensor p = permute(a, {3, 1, 0, 2});
    auto sa = std::vector<Complex>(a.data().begin(), a.data().end());
    auto sp = std::vector<Complex>(p.data().begin(), p.data().end());
    const auto key = [](const Complex& x, const Complex& y) {
      return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
    };
    std::sort(sa.begin(), sa.end(), key);
    std::sort(sp.begin(), sp.end(), key);
    EXPECT_EQ(sa, sp);  // same multiset of entries, so the same norm
  }
}

TEST(Permute, InvalidPermutationThrows) {
  const Tensor a({2, 2});
  EXPECT_THROW(permute(a, {0, 0}), SpecError);
  EXPECT_THROW(permute(a, {0}), SpecError);
  EXPECT_THROW(permute(a, {0, 2}), SpecError);
}

TEST(Einsum, MatchesContract) {
  Rng rng(10);
  const Tensor a = random_tensor({2, 3, 4}, rng), b = random_tensor({4, 2, 5}, rng);
  const Tensor viaEinsum = einsum("abc,cad->db", a, b);
  const Tensor viaContract = contract(a, b, {{{2, 0}, {0, 1}}, {1, 0}});
  EXPECT_LE(max_abs_diff(viaEinsum, viaContract), 1e-14);
}

TEST(Einsum, MalformedExpressionsThrow) {
  const Tensor a({2, 2}), b({2, 2});
  EXPECT_THROW(einsum("ab,bc", a, b), SpecError);
  EXPECT_THROW(einsum("abc,bc->a", a, b), SpecError);
  EXPECT_THROW(einsum("ab,bc->ad", a, b), SpecError);
}

TEST(Tensor, TraceLegs) {
  Rng rng(11);
  const Tensor a = random_tensor({3, 2, 3}, rng);
  const Tensor t = trace_legs(a, 0, 2);
  for (std::size_t j = 0; j < 2; ++j) {
    Complex expect{};
    for (std::size_t i = 0; i < 3; ++i) expect += a.at({i, j, i});
    EXPECT_LE(std::abs(t.at({j}) - expect), 1e-14);
  }
}

TEST(Tensor, ShapeAndDataMustAgree) {
  EXPECT_THROW(Tensor({2, 2}, std::vector<Complex>(3)), SpecError);
  EXPECT_THROW(Tensor({2, 0}), SpecError);
}

}  // namespace
}  // namespace qumera::tensnet
