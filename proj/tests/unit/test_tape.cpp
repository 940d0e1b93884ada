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

#include "qumera/tensnet/tape.hpp"
#include "test_util.hpp"

namespace qumera::tensnet {
namespace {

using testing::max_abs_diff;
using testing::random_tensor;

TEST(Tape, MatrixChainAdjoints) {
  // f = tr(A B C); df/dA = (B C)^T, df/dB = (C A)^T, df/dC = (A B)^T.
  Rng rng(1);
  const Tensor a = random_tensor({3, 4}, rng), b = random_tensor({4, 5}, rng), c = random_tensor({5, 3}, rng);
  Tape tape;
  const auto ha = tape.leaf(a), hb = tape.leaf(b), hc = tape.leaf(c);
  const auto ab = tape.einsum("ij,jk->ik", ha, hb);
  const auto f = tape.einsum("ik,ki->", ab, hc);
  const auto adj = tape.backward(f, Tensor::scalar(1.0));
  EXPECT_LE(max_abs_diff(adj[ha], permute(einsum("jk,ki->ji", b, c), {1, 0})), 1e-12);
  EXPECT_LE(max_abs_diff(adj[hb], permute(einsum("ki,ij->kj", c, a), {1, 0})), 1e-12);
  EXPECT_LE(max_abs_diff(adj[hc], permute(einsum("ij,jk->ik", a, b), {1, 0})), 1e-12);
}

TEST(Tape, LeafUsedTwiceAccumulates) {
  // f = sum_ij x_ij x_ij  ->  df/dx = 2 x
  Rng rng(2);
  const Tensor x = random_tensor({2, 3}, rng);
  Tape tape;
  const auto hx = tape.leaf(x);
  const auto f = tape.einsum("ij,ij->", hx, hx);
  const auto adj = tape.backward(f, Tensor::scalar(1.0));
  EXPECT_LE(max_abs_diff(adj[hx], x * Complex{2.0}), 1e-13);
}

TEST(Tape, EagerOpsGiveTheSameValue) {
  Rng rng(3);
  const Tensor a = random_tensor({2, 2, 3}, rng), b = random_tensor({3, 2}, rng);
  Tape tape;
  const auto t = tape.einsum("abc,cd->abd", tape.leaf(a), tape.leaf(b));
  EagerOps eager;
  EXPECT_EQ(tape.value(t), eager.einsum("abc,cd->abd", a, b));
}

}  // namespace
}  // namespace qumera::tensnet
