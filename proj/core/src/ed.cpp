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

#include "qumera/models/ed.hpp"

#include <cmath>
#include <cstdint>

#include <Eigen/Eigenvalues>

#include "qumera/error.hpp"
#include "qumera/tensnet/rng.hpp"

namespace qumera::models {

namespace {

using Real = Eigen::VectorXd;

// Site j is bit j of the basis label; bit value 0 is spin up (Z = +1).
class ChainHamiltonian {
 public:
  ChainHamiltonian(const SpinModelParams& p, std::size_t L) : p_(p), L_(L), dim_(std::size_t{1} << L) {
    diag_.resize(static_cast<Eigen::Index>(dim_));
    for (std::size_t s = 0; s < dim_; ++s) {
      double d = 0.0;
      for (std::size_t j = 0; j < L_; ++j) {
        const std::size_t k = (j + 1) % L_;
        const double zj = z(s, j), zk = z(s, k);
        d += -0.5 * p_.J * p_.delta * zj * zk - p_.J * p_.b_field * zj;
      }
      diag_(static_cast<Eigen::Index>(s)) = d;
    }
  }

  std::size_t dim() const { return dim_; }

  void apply(const Real& in, Real& out) const {
    out = diag_.cwiseProduct(in);
    // (1+g) XX + (1-g) YY flips both spins: amplitude 2g on aligned pairs,
    // 2 on anti-aligned pairs.
    const double aligned = -p_.J * p_.gamma;
    const double opposite = -p_.J;
    for (std::size_t j = 0; j < L_; ++j) {
      const std::size_t k = (j + 1) % L_;
      const std::size_t mask = (std::size_t{1} << j) | (std::size_t{1} << k);
      for (std::size_t s = 0; s < dim_; ++s) {
        const bool same = ((s >> j) & 1U) == ((s >> k) & 1U);
        out(static_cast<Eigen::Index>(s ^ mask)) += (same ? aligned : opposite) * in(static_cast<Eigen::Index>(s));
      }
    }
  }

  static double z(std::size_t s, std::size_t j) { return ((s >> j) & 1U) ? -1.0 : 1.0; }

 private:
  SpinModelParams p_;
  std::size_t L_;
  std::size_t dim_;
  Real diag_;
};

double one_point(const Real& psi, char alpha, std::size_t site) {
  double acc = 0.0;
  const auto dim = static_cast<std::size_t>(psi.size());
  for (std::size_t s = 0; s < dim; ++s) {
    const double a = psi(static_cast<Eigen::Index>(s));
    if (alpha == 'z') {
      acc += a * a * ChainHamiltonian::z(s, site);
    } else if (alpha == 'x') {
      acc += a * psi(static_cast<Eigen::Index>(s ^ (std::size_t{1} << site)));
    }
    // <Y> vanishes for a real state: Y is imaginary antisymmetric.
  }
  return acc;
}

double two_point(const Real& psi, char alpha, std::size_t i, std::size_t j) {
  if (i == j) return 1.0;
  const auto dim = static_cast<std::size_t>(psi.size());
  const std::size_t mask = (std::size_t{1} << i) | (std::size_t{1} << j);
  double acc = 0.0;
  for (std::size_t s = 0; s < dim; ++s) {
    const double a = psi(static_cast<Eigen::Index>(s));
    if (alpha == 'z') {
      acc += a * a * ChainHamiltonian::z(s, i) * ChainHamiltonian::z(s, j);
    } else {
      double amp = psi(static_cast<Eigen::Index>(s ^ mask));
      // Y|s> = i (-1)^s |s^1>, so Y_i Y_j picks up -(-1)^(s_i + s_j).
      if (alpha == 'y') amp *= -ChainHamiltonian::z(s, i) * ChainHamiltonian::z(s, j);
      acc += a * amp;
    }
  }
  return acc;
}

}  // namespace

EdResult ed_oracle(const SpinModelParams& params, std::size_t L,
                   const std::vector<CorrelatorRequest>& observables) {
  params.validate();
  if (L < 2 || L > kMaxEdSites) {
    throw InvariantError("ed_oracle: L=" + std::to_string(L) + " outside [2, " +
                         std::to_string(kMaxEdSites) + "]");
  }
  for (const auto& o : observables) {
    if (o.alpha != 'x' && o.alpha != 'y' && o.alpha != 'z') throw InvariantError("ed_oracle: alpha must be x, y or z");
  }
  const ChainHamiltonian H(params, L);
  const auto n = static_cast<Eigen::Index>(H.dim());
  const Eigen::Index max_steps = std::min<Eigen::Index>(n, 600);

  std::vector<Real> basis;
  {
    tensnet::Rng rng(0xed0ed0);
    Real v0(n);
    for (Eigen::Index i = 0; i < n; ++i) v0(i) = rng.uniform(-1.0, 1.0);
    basis.push_back(v0.normalized());
  }
  std::vector<double> alpha, beta;
  Real w(n);
  double energy = 0.0, residual = 1.0;
  Eigen::VectorXd ritz;
  Eigen::Index steps = 0;
  for (Eigen::Index j = 0; j < max_steps; ++j) {
    const Real& v = basis.back();
    H.apply(v, w);
    alpha.push_back(v.dot(w));
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) w -= q.dot(w) * q;
    }
    const double b = w.norm();
    steps = j + 1;

    const Eigen::Map<const Eigen::VectorXd> diag(alpha.data(), steps);
    const Eigen::Map<const Eigen::VectorXd> sub(beta.data(), steps - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    energy = es.eigenvalues()(0);
    ritz = es.eigenvectors().col(0);
    residual = b * std::abs(ritz(steps - 1));
    if (residual <= 1e-11 || b <= 1e-13 || steps == n) break;
    beta.push_back(b);
    basis.push_back(w / b);
  }
  if (residual > 1e-8) {
    throw ConvergenceError("ed_oracle: Lanczos did not converge (residual " + std::to_string(residual) + ")",
                           residual);
  }

  Real psi = Real::Zero(n);
  for (Eigen::Index i = 0; i < steps; ++i) psi += ritz(i) * basis[static_cast<std::size_t>(i)];
  psi.normalize();
  EdResult result;
  result.ground_energy = energy;
  result.lanczos_steps = static_cast<int>(steps);
  result.ground_state.assign(psi.data(), psi.data() + psi.size());
  for (const auto& o : observables) {
    const std::size_t j = o.distance % L;
    const double conn = two_point(psi, o.alpha, 0, j) - one_point(psi, o.alpha, 0) * one_point(psi, o.alpha, j);
    result.correlators.push_back({o.alpha, o.distance, conn});
  }
  return result;
}

}  // namespace qumera::models
