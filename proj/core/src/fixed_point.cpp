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

#include "qumera/channel/fixed_point.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qumera/channel/krylov.hpp"
#include "qumera/channel/superoperator.hpp"
#include "qumera/error.hpp"

namespace qumera::channel {

namespace {

Vector to_vector(const Tensor& t) {
  return Eigen::Map<const Vector>(t.data().data(), static_cast<Eigen::Index>(t.size()));
}

Tensor to_tensor(const Vector& v, std::size_t m) {
  Tensor t({m, m, m, m, m, m});
  Eigen::Map<Vector>(t.data().data(), v.size()) = v;
  return t;
}

Complex trace_of(const Vector& v, std::size_t m) {
  const auto n = static_cast<Eigen::Index>(m * m * m);
  Complex tr = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) tr += v(i * n + i);
  return tr;
}

class Solver {
 public:
  Solver(const MeraAnsatz& ansatz, const FixedPointOptions& options)
      : ansatz_(ansatz), options_(options) {}

  FixedPointResult run(DensityMatrix3 rho) {
    if (options_.method == FixedPointMethod::kKrylov) return krylov(std::move(rho));
    return power(std::move(rho));
  }

 private:
  Tensor apply(const Tensor& rho) {
    if (spent_ >= options_.max_iter) {
      throw ConvergenceError("fixed_point: no convergence after " + std::to_string(spent_) +
                                 " descend applications, residual " + std::to_string(best_),
                             best_);
    }
    ++spent_;
    return descend_raw(rho, ansatz_);
  }

  FixedPointResult finish(DensityMatrix3 rho, double residual) {
    FixedPointResult r;
    r.rho = std::move(rho);
    r.residual = residual;
    r.iterations = spent_;
    r.used_krylov = used_krylov_;
    r.degenerate_warning = degenerate_;
    return r;
  }

  FixedPointResult power(DensityMatrix3 rho) {
    double previous = std::numeric_limits<double>::infinity();
    int stalled = 0;
    for (;;) {
      Tensor image = apply(rho.rho);
      const double residual = (image - rho.rho).norm();
      best_ = std::min(best_, residual);
      if (residual <= options_.tol) return finish(std::move(rho), residual);
      stalled = residual > options_.stall_ratio * previous ? stalled + 1 : 0;
      previous = residual;
      rho = normalize_density(image);
      if (options_.method == FixedPointMethod::kAuto && stalled >= options_.stall_window) {
        return krylov(std::move(rho));
      }
    }
  }

  FixedPointResult krylov(DensityMatrix3 rho) {
    used_krylov_ = true;
    const std::size_t m = ansatz_.m;
    const LinearMap op = [&](const Vector& v) { return to_vector(apply(to_tensor(v, m))); };
    for (;;) {
      const auto steps = static_cast<Eigen::Index>(options_.krylov_dim);
      // Stop the cycle once the Ritz pair nearest 1, scaled to unit trace,
      // is predicted to meet the tolerance; a warm start gets there early.
      const ArnoldiStop converged = [&](const ArnoldiFactorization& partial) {
        const auto pairs = ritz_pairs(partial, true);
        const RitzPair* near = &pairs.front();
        for (const auto& r : pairs) {
          if (std::abs(r.value - 1.0) < std::abs(near->value - 1.0)) near = &r;
        }
        const Complex tr = trace_of(near->vector, m);
        return std::abs(tr) > 1e-12 && near->residual / std::abs(tr) <= 0.5 * options_.tol;
      };
      const auto f = arnoldi(op, to_vector(rho.rho), steps, converged);
      const auto ritz = ritz_pairs(f, true);
      int near_unit = 0;
      const RitzPair* best = &ritz.front();
      for (const auto& r : ritz) {
        if (std::abs(std::abs(r.value) - 1.0) <= 1e-8) ++near_unit;
        if (std::abs(r.value - 1.0) < std::abs(best->value - 1.0)) best = &r;
      }
      degenerate_ = near_unit >= 2;
      const Tensor candidate = to_tensor(best->vector, m);
      const Complex tr = candidate.matrix(3).trace();
      if (std::abs(tr) > 1e-12 * candidate.norm()) {
        // Every eigenvector of a trace-preserving map with eigenvalue != 1 is
        // traceless, so dividing by the trace fixes the phase.
        Tensor scaled = candidate * (1.0 / tr);
        rho = normalize_density(scaled);
      } else {
        rho = normalize_density(apply(rho.rho));
      }
      const Tensor image = apply(rho.rho);
      const double residual = (image - rho.rho).norm();
      best_ = std::min(best_, residual);
      if (residual <= options_.tol) return finish(std::move(rho), residual);
    }
  }

  const MeraAnsatz& ansatz_;
  const FixedPointOptions& options_;
  int spent_ = 0;
  double best_ = std::numeric_limits<double>::infinity();
  bool used_krylov_ = false;
  bool degenerate_ = false;
};

}  // namespace

FixedPointResult fixed_point(const MeraAnsatz& ansatz, const std::optional<DensityMatrix3>& guess,
                             const FixedPointOptions& options) {
  if (!(options.tol > 0.0)) throw Error("fixed_point: tolerance must be positive");
  ansatz.validate();
  DensityMatrix3 start = guess ? normalize_density(guess->rho) : DensityMatrix3::maximally_mixed(ansatz.m);
  if (start.m() != ansatz.m) throw InvariantError("fixed_point: guess dimension does not match ansatz");
  return Solver(ansatz, options).run(std::move(start));
}

}  // namespace qumera::channel
