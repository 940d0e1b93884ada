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

// Brute-force contraction oracle and random contraction cases.

#include <algorithm>
#include <numeric>
#include <vector>

#include "qumera/tensnet/rng.hpp"
#include "qumera/tensnet/tensor.hpp"
#include "test_util.hpp"

namespace qumera::testing {

using tensnet::ContractionSpec;
using tensnet::Rng;
using tensnet::shape_volume;

// Direct sum over every index combination of a and b.
inline Tensor naive_contract(const Tensor& a, const Tensor& b, const ContractionSpec& spec) {
  std::vector<bool> a_paired(a.rank(), false), b_paired(b.rank(), false);
  for (auto [i, j] : spec.pairs) a_paired[i] = b_paired[j] = true;
  std::vector<std::pair<int, std::size_t>> free;  // (0 = a / 1 = b, leg)
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!a_paired[i]) free.emplace_back(0, i);
  for (std::size_t j = 0; j < b.rank(); ++j)
    if (!b_paired[j]) free.emplace_back(1, j);
  std::vector<std::size_t> order = spec.output_order;
  if (order.empty()) {
    order.resize(free.size());
    std::iota(order.begin(), order.end(), 0);
  }
  Shape out_shape;
  for (auto k : order) out_shape.push_back(free[k].first == 0 ? a.dim(free[k].second) : b.dim(free[k].second));
  Tensor out(out_shape);

  std::vector<std::size_t> ia(a.rank(), 0), ib(b.rank(), 0), io(order.size());
  const auto advance = [](std::vector<std::size_t>& idx, const Shape& shape) {
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < shape[k]) return true;
      idx[k] = 0;
    }
    return false;
  };
  do {
    std::fill(ib.begin(), ib.end(), 0);
    do {
      bool match = true;
      for (auto [i, j] : spec.pairs) match = match && ia[i] == ib[j];
      if (!match) continue;
      for (std::size_t k = 0; k < order.size(); ++k) {
        const auto [which, leg] = free[order[k]];
        io[k] = which == 0 ? ia[leg] : ib[leg];
      }
      out[out.flat_index(io)] += a[a.flat_index(ia)] * b[b.flat_index(ib)];
    } while (advance(ib, b.shape()));
  } while (advance(ia, a.shape()));
  return out;
}

struct RandomCase {
  Tensor a, b;
  ContractionSpec spec;
};

inline RandomCase random_case(Rng& rng) {
  const auto draw = [&](std::size_t lo, std::size_t hi) { return lo + rng.next() % (hi - lo + 1); };
  for (;;) {
    Shape sa(draw(1, 4)), sb(draw(1, 4));
    for (auto& d : sa) d = draw(1, 3);
    for (auto& d : sb) d = draw(1, 3);
    if (shape_volume(sa) > 64 || shape_volume(sb) > 64) continue;
    ContractionSpec spec;
    std::vector<bool> used_b(sb.size(), false);
    for (std::size_t i = 0; i < sa.size(); ++i) {
      if (rng.uniform() < 0.5) continue;
      for (std::size_t j = 0; j < sb.size(); ++j) {
        if (!used_b[j] && sb[j] == sa[i]) {
          used_b[j] = true;
          spec.pairs.emplace_back(i, j);
          break;
        }
      }
    }
    const std::size_t free = sa.size() + sb.size() - 2 * spec.pairs.size();
    spec.output_order.resize(free);
    std::iota(spec.output_order.begin(), spec.output_order.end(), 0);
    for (std::size_t k = free; k > 1; --k) std::swap(spec.output_order[k - 1], spec.output_order[rng.next() % k]);
    return {random_tensor(sa, rng), random_tensor(sb, rng), spec};
  }
}

}  // namespace qumera::testing
