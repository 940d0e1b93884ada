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

#include "qumera/opt/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "qumera/channel/krylov.hpp"
#include "qumera/channel/network.hpp"
#include "qumera/channel/superoperator.hpp"
#include "qumera/error.hpp"
#include "qumera/tensnet/isometry.hpp"
#include "qumera/tensnet/tape.hpp"

namespace qumera::opt {

using tensnet::Complex;

namespace {

constexpr int kAbortAfterFailedSweeps = 3;

int blocking_for(std::size_t m) {
  int b = 0;
  while ((std::size_t{1} << b) < m) ++b;
  if ((std::size_t{1} << b) != m) throw InvariantError("optimize: m=" + std::to_string(m) + " is not a power of 2");
  return b;
}

struct Evaluation {
  bool ok = false;
  double score = 0.0;  // what proposals are ranked by
  MeraAnsatz ansatz;
  channel::FixedPointResult fp;
  double energy = 0.0;  // per spin, valid when fp was solved
};

}  // namespace

const char* target_name(Target t) { return t == Target::kChi ? "chi" : "lambda"; }

void OptimizerConfig::validate() const {
  if (!(epsilon_min > 0.0) || !(epsilon_min <= epsilon_start)) {
    throw SpecError("optimizer config: need 0 < epsilon_min <= epsilon_start");
  }
  if (!(epsilon_decay > 0.0 && epsilon_decay < 1.0)) {
    throw SpecError("optimizer config: epsilon_decay must lie in (0, 1)");
  }
  if (sweeps < 0) throw SpecError("optimizer config: sweeps must be >= 0");
  if (moves_per_tensor < 1) throw SpecError("optimizer config: moves_per_tensor must be >= 1");
  if (!(fp_tol > 0.0)) throw SpecError("optimizer config: fp_tol must be positive");
  if (fp_max_iter < 1) throw SpecError("optimizer config: fp_max_iter must be >= 1");
  if (!(penalty >= 0.0)) throw SpecError("optimizer config: penalty must be >= 0");
  if (checkpoint_every < 0) throw SpecError("optimizer config: checkpoint_every must be >= 0");
  if (!(max_seconds >= 0.0)) throw SpecError("optimizer config: max_seconds must be >= 0");
}

channel::FixedPointOptions optimizer_fixed_point_options(const OptimizerConfig& config) {
  channel::FixedPointOptions o;
  o.tol = config.fp_tol;
  o.max_iter = config.fp_max_iter;
  o.method = channel::FixedPointMethod::kKrylov;
  return o;
}

ObjectiveValue objective(const MeraAnsatz& ansatz, const DensityMatrix3& rho, const Operator3& h,
                         const OptimizerConfig& config) {
  ansatz.validate();
  h.validate();
  const Tensor image = channel::descend_raw(rho.rho, ansatz);
  const Complex e = tensnet::einsum("abcABC,ABCabc->", image, h.op).data()[0];
  ObjectiveValue out;
  out.penalty = (image - rho.rho).norm();
  out.value = e.real();
  if (config.lagrange_mode == LagrangeMode::kPenalty) out.value += config.penalty * out.penalty;
  return out;
}

Tensor linearized_gradient(const MeraAnsatz& ansatz, const DensityMatrix3& rho, const Operator3& h,
                           Target target) {
  tensnet::Tape tape;
  const auto r = tape.leaf(rho.rho);
  const auto lam = tape.leaf(ansatz.lambda);
  const auto lam_c = tape.leaf(ansatz.lambda.conj());
  const auto chi = tape.leaf(ansatz.chi);
  const auto chi_c = tape.leaf(ansatz.chi.conj());
  const auto h4 = tape.leaf(channel::network::four_site_operator(h.op));
  const auto f = channel::network::energy_term(tape, r, lam, lam_c, chi, chi_c, h4);
  const auto adj = tape.backward(f, Tensor::scalar(Complex{1.0}));
  // With T and conj(T) as separate leaves, df/dRe T + i df/dIm T equals
  // df/dconj(T) + conj(df/dT).
  if (target == Target::kChi) return adj[chi_c] + adj[chi].conj();
  return adj[lam_c] + adj[lam].conj();
}

Operator3 scale_summed_hamiltonian(const MeraAnsatz& ansatz, const DensityMatrix3& rho, const Operator3& h,
                                   double tol) {
  const std::size_t m = ansatz.m;
  const auto n = static_cast<Eigen::Index>(h.op.size());
  const Tensor id = Operator3::identity(m).op;
  const auto expect = [&](const Tensor& x) { return tensnet::einsum("abcABC,ABCabc->", rho.rho, x).data()[0]; };
  const Tensor rhs = h.op - id * expect(h.op);
  const auto to_tensor = [m, n](const channel::Vector& v) {
    Tensor t({m, m, m, m, m, m});
    Eigen::Map<channel::Vector>(t.data().data(), n) = v;
    return t;
  };
  const channel::LinearMap op = [&](const channel::Vector& v) {
    const Tensor up = channel::ascend_raw(to_tensor(v), ansatz);
    return channel::Vector(v - Eigen::Map<const channel::Vector>(up.data().data(), n));
  };
  const auto sol = channel::gmres(op, Eigen::Map<const channel::Vector>(rhs.data().data(), n), 40, tol, 4000);
  if (sol.relative_residual > std::max(tol, 1e-6)) {
    throw ConvergenceError("scale_summed_hamiltonian: GMRES residual " + std::to_string(sol.relative_residual),
                           sol.relative_residual);
  }
  Tensor x = to_tensor(sol.x);
  x -= id * expect(x);
  // Hermitian part; the solve only preserves hermiticity to its tolerance.
  const Tensor xh = (x + tensnet::permute(x, {3, 4, 5, 0, 1, 2}).conj()) * Complex{0.5};
  return Operator3{xh, true};
}

Tensor sign_step(const Tensor& tensor, const Tensor& gradient, double epsilon, tensnet::Rng& rng,
                 Target target) {
  if (tensor.shape() != gradient.shape()) throw SpecError("sign_step: gradient shape does not match tensor");
  const auto sign = [](double g) { return g > 0.0 ? 1.0 : (g < 0.0 ? -1.0 : 0.0); };
  Tensor moved = tensor;
  for (std::size_t i = 0; i < moved.size(); ++i) {
    const Complex g = gradient.data()[i];
    const double dr = sign(g.real()) * epsilon * rng.uniform();
    const double di = sign(g.imag()) * epsilon * rng.uniform();
    moved.data()[i] -= Complex{dr, di};
  }
  // chi: (out1 out2) x (in1 in2); lambda: (low1 low2) x (up).
  (void)target;
  return tensnet::retract_isometry(moved, {0, 1});
}

OptimizerState optimize(const Operator3& h, const OptimizerConfig& config,
                        const std::optional<MeraAnsatz>& init, const SweepObserver& observer) {
  config.validate();
  h.validate();
  const std::size_t m = h.m();
  const auto started = std::chrono::steady_clock::now();
  const auto out_of_time = [&] {
    if (config.max_seconds <= 0.0) return false;
    const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - started;
    return spent.count() >= config.max_seconds;
  };
  tensnet::Rng init_rng(tensnet::Rng::derive_seed(config.seed, 0));
  tensnet::Rng move_rng(tensnet::Rng::derive_seed(config.seed, 1));

  OptimizerState state;
  state.ansatz = init ? *init : MeraAnsatz::random(m, blocking_for(m), init_rng);
  state.ansatz.validate();
  if (state.ansatz.m != m) throw InvariantError("optimize: initial ansatz m does not match h");
  const auto fp_options = optimizer_fixed_point_options(config);
  const double blocking = static_cast<double>(state.ansatz.blocking);

  {
    // The cold start gets the solver's default budget; fp_max_iter bounds the
    // warm-started re-solves only.
    auto cold = fp_options;
    cold.max_iter = std::max(cold.max_iter, channel::FixedPointOptions{}.max_iter);
    auto fp = channel::fixed_point(state.ansatz, std::nullopt, cold);
    state.rho_star = std::move(fp.rho);
    state.residual = fp.residual;
    state.energy = channel::energy(state.ansatz, state.rho_star, h).per_spin;
  }
  state.epsilon = config.epsilon_start;
  state.trace.push_back({0, state.epsilon, state.energy, state.residual, "none"});

  const auto solve = [&](Evaluation& ev) {
    try {
      ev.fp = channel::fixed_point(ev.ansatz, state.rho_star, fp_options);
      ev.energy = channel::energy(ev.ansatz, ev.fp.rho, h).per_spin;
      return true;
    } catch (const Error&) {
      return false;
    }
  };

  int failed_sweeps = 0;
  for (int sweep = 1;; ++sweep) {
    if (sweep > config.sweeps) {
      state.stop_reason = "sweeps";
      break;
    }
    if (state.epsilon < config.epsilon_min) {
      state.stop_reason = "epsilon";
      break;
    }
    if (out_of_time()) {
      state.stop_reason = "time";
      break;
    }
    std::string accepted;
    int evaluated = 0;
    for (const Target target : {Target::kChi, Target::kLambda}) {
      Tensor grad = config.gradient_mode == GradientMode::kScaleSummed
                        ? linearized_gradient(state.ansatz, state.rho_star,
                                              scale_summed_hamiltonian(state.ansatz, state.rho_star, h), target)
                        : linearized_gradient(state.ansatz, state.rho_star, h, target);
      if (config.tangent_projection) {
        grad = tensnet::project_tangent(target == Target::kChi ? state.ansatz.chi : state.ansatz.lambda, grad, 2);
      }
      const Tensor& current = target == Target::kChi ? state.ansatz.chi : state.ansatz.lambda;
      Evaluation best;
      for (int k = 0; k < config.moves_per_tensor; ++k) {
        Evaluation ev;
        ev.ansatz = state.ansatz;
        try {
          (target == Target::kChi ? ev.ansatz.chi : ev.ansatz.lambda) =
              sign_step(current, grad, state.epsilon, move_rng, target);
        } catch (const RankDeficientError&) {
          ++state.failed_proposals;
          continue;
        }
        if (config.lagrange_mode == LagrangeMode::kExactResolve) {
          if (!solve(ev)) {
            ++state.failed_proposals;
            continue;
          }
          ev.score = ev.energy;
        } else {
          ev.score = objective(ev.ansatz, state.rho_star, h, config).value / blocking;
        }
        ev.ok = true;
        ++evaluated;
        if (!best.ok || ev.score < best.score) best = std::move(ev);
      }
      if (!best.ok) continue;
      if (config.lagrange_mode == LagrangeMode::kPenalty) {
        const double current_score = objective(state.ansatz, state.rho_star, h, config).value / blocking;
        if (!(best.score < current_score)) continue;
        if (!solve(best)) {
          ++state.failed_proposals;
          continue;
        }
      }
      if (best.energy < state.energy) {
        state.ansatz = std::move(best.ansatz);
        state.rho_star = std::move(best.fp.rho);
        state.residual = best.fp.residual;
        state.energy = best.energy;
        accepted += accepted.empty() ? target_name(target) : std::string("+") + target_name(target);
      }
    }
    if (evaluated == 0) {
      if (++failed_sweeps >= kAbortAfterFailedSweeps) {
        throw OptimizerAbortError("optimize: every proposal failed for " + std::to_string(failed_sweeps) +
                                  " consecutive sweeps (epsilon " + std::to_string(state.epsilon) + ")");
      }
    } else {
      failed_sweeps = 0;
    }
    state.sweeps_run = sweep;
    state.trace.push_back({sweep, state.epsilon, state.energy, state.residual,
                           accepted.empty() ? "none" : accepted});
    if (accepted.empty()) state.epsilon *= config.epsilon_decay;
    if (observer) observer(state, config.checkpoint_every > 0 && sweep % config.checkpoint_every == 0);
  }
  return state;
}

}  // namespace qumera::opt
