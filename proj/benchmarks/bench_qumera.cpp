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

#include <benchmark/benchmark.h>

#include <optional>

#include "qumera/channel/fixed_point.hpp"
#include "qumera/channel/superoperator.hpp"
#include "qumera/models/spin_model.hpp"
#include "qumera/opt/optimizer.hpp"
#include "qumera/tensnet/rng.hpp"
#include "qumera/tensnet/tensor.hpp"

namespace {

using namespace qumera;
using channel::DensityMatrix3;
using channel::MeraAnsatz;
using channel::Operator3;

MeraAnsatz ansatz_for(const benchmark::State& state) {
  tensnet::Rng rng(7);
  return MeraAnsatz::random(static_cast<std::size_t>(state.range(0)), 1, rng);
}

Operator3 random_operator(std::size_t m, tensnet::Rng& rng) {
  tensnet::Tensor t({m, m, m, m, m, m});
  for (auto& z : t.data()) z = rng.complex_normal();
  auto mat = t.matrix(3);
  return Operator3::from_matrix(0.5 * (mat + mat.adjoint()), m);
}

void BM_Descend(benchmark::State& state) {
  const auto a = ansatz_for(state);
  tensnet::Rng rng(3);
  const auto rho = DensityMatrix3::random(a.m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(channel::descend_raw(rho.rho, a));
}
BENCHMARK(BM_Descend)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_Ascend(benchmark::State& state) {
  const auto a = ansatz_for(state);
  tensnet::Rng rng(3);
  const auto h = random_operator(a.m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(channel::ascend_raw(h.op, a));
}
BENCHMARK(BM_Ascend)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_FixedPoint(benchmark::State& state) {
  const auto a = ansatz_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(channel::fixed_point(a, std::nullopt));
}
BENCHMARK(BM_FixedPoint)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LinearizedGradient(benchmark::State& state) {
  const auto a = ansatz_for(state);
  const auto rho = channel::fixed_point(a, std::nullopt).rho;
  const int b = state.range(0) == 2 ? 1 : 2;
  const auto h = models::build_local_h(models::ModelPreset::ising_critical().params, b);
  const auto target = state.range(1) == 0 ? opt::Target::kChi : opt::Target::kLambda;
  for (auto _ : state) benchmark::DoNotOptimize(opt::linearized_gradient(a, rho, h, target));
}
BENCHMARK(BM_LinearizedGradient)->ArgsProduct({{2, 4}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_Contract(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  tensnet::Rng rng(5);
  tensnet::Tensor x({n, n, n, n}), y({n, n, n, n});
  for (auto& z : x.data()) z = rng.complex_normal();
  for (auto& z : y.data()) z = rng.complex_normal();
  const tensnet::ContractionSpec spec{{{1, 0}, {3, 2}}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(tensnet::contract(x, y, spec));
}
BENCHMARK(BM_Contract)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
