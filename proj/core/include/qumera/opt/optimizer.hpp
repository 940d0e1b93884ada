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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qumera/channel/ansatz.hpp"
#include "qumera/channel/fixed_point.hpp"
#include "qumera/tensnet/rng.hpp"

namespace qumera::opt {

using channel::DensityMatrix3;
using channel::MeraAnsatz;
using channel::Operator3;
using tensnet::Tensor;

enum class LagrangeMode {
  kExactResolve,  // re-solve the fixed point for every proposal
  kPenalty,       // score proposals by F = Tr[Phi(rho) h] + L ||Phi(rho) - rho||_F at fixed rho
};

enum class Target { kChi, kLambda };

enum class GradientMode {
  kLinearized,   // d/dT Tr[Phi(rho*) h], rho* fixed
  kScaleSummed,  // same with h replaced by the scale sum of ascended h
};

const char* target_name(Target t);

struct OptimizerConfig {
  double epsilon_start = 0.1;
  double epsilon_min = 1e-5;
  double epsilon_decay = 0.5;     // applied after a sweep with no accepted move
  int sweeps = 2000;
  int moves_per_tensor = 4;
  double fp_tol = 1e-10;
  int fp_max_iter = 2000;         // descend applications per warm-started re-solve
  std::uint64_t seed = 1;
  LagrangeMode lagrange_mode = LagrangeMode::kExactResolve;
  double penalty = 10.0;          // L in penalty mode; no principled value exists
  int checkpoint_every = 0;       // sweeps between checkpoint callbacks, 0 = never
  GradientMode gradient_mode = GradientMode::kLinearized;
  bool tangent_projection = false;  // project the gradient before the sign rule
  double max_seconds = 0.0;       // wall-clock budget checked between sweeps, 0 = none

  void validate() const;  // throws SpecError
};

struct ObjectiveValue {
  double value = 0.0;    // exact mode: Tr[Phi(rho) h]; penalty mode: full F
  double penalty = 0.0;  // ||Phi(rho) - rho||_F, always reported
};

ObjectiveValue objective(const MeraAnsatz& ansatz, const DensityMatrix3& rho, const Operator3& h,
                         const OptimizerConfig& config);

// Derivative of Tr[Phi(rho) h] with rho held fixed, summed over the three
// lambda copies or the two chi copies. Entry (re, im) of the result is
// (df/dRe T, df/dIm T) for the matching entry of T.
Tensor linearized_gradient(const MeraAnsatz& ansatz, const DensityMatrix3& rho, const Operator3& h,
                           Target target);

// H_eff = sum_n ascend^n(h - e I), e = Tr[rho h], normalised so that
// Tr[rho H_eff] = 0. Its linearized gradient is the full derivative of the
// fixed-point energy Tr[rho*(T) h], including the change of rho*. Solved as
// (1 - ascend) H_eff = h - e I by GMRES.
Operator3 scale_summed_hamiltonian(const MeraAnsatz& ansatz, const DensityMatrix3& rho, const Operator3& h,
                                   double tol = 1e-8);

// retract(tensor - delta): each real and imaginary component of delta has
// magnitude uniform in [0, epsilon] and the sign of the matching gradient
// component (zero where the gradient component is zero). One uniform draw is
// consumed per component, in storage order, real part first.
Tensor sign_step(const Tensor& tensor, const Tensor& gradient, double epsilon, tensnet::Rng& rng,
                 Target target);

struct TraceEntry {
  int sweep = 0;
  double epsilon = 0.0;
  double energy = 0.0;     // per spin
  double residual = 0.0;
  std::string accepted;    // "none", "chi", "lambda" or "chi+lambda"
};

struct OptimizerState {
  MeraAnsatz ansatz;
  DensityMatrix3 rho_star;
  double energy = 0.0;     // per spin
  double residual = 0.0;
  double epsilon = 0.0;
  int sweeps_run = 0;
  int failed_proposals = 0;
  std::string stop_reason;  // "epsilon", "sweeps" or "time"
  std::vector<TraceEntry> trace;
};

// Called after each sweep; used for progress output and checkpoints.
using SweepObserver = std::function<void(const OptimizerState&, bool checkpoint_due)>;

// Greedy best-of-k sign descent alternating chi and lambda. The initial
// ansatz is drawn from the seed when `init` is empty. Throws
// OptimizerAbortError when every proposal fails for 3 consecutive sweeps.
OptimizerState optimize(const Operator3& h, const OptimizerConfig& config,
                        const std::optional<MeraAnsatz>& init = std::nullopt,
                        const SweepObserver& observer = {});

// Fixed-point settings the optimizer uses for a given config.
channel::FixedPointOptions optimizer_fixed_point_options(const OptimizerConfig& config);

}  // namespace qumera::opt
