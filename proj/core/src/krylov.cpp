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

#include "qumera/channel/krylov.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "qumera/error.hpp"

namespace qumera::channel {

ArnoldiFactorization arnoldi(const LinearMap& apply, const Vector& start, Eigen::Index steps,
                             const ArnoldiStop& stop) {
  const Eigen::Index n = start.size();
  steps = std::min(steps, n);
  ArnoldiFactorization f;
  f.basis = Eigen::MatrixXcd::Zero(n, steps + 1);
  f.hessenberg = Eigen::MatrixXcd::Zero(steps + 1, steps);
  const double start_norm = start.norm();
  if (!(start_norm > 0.0)) throw Error("arnoldi: zero start vector");
  f.basis.col(0) = start / start_norm;

  for (Eigen::Index j = 0; j < steps; ++j) {
    Vector w = apply(f.basis.col(j));
    const double w_norm = w.norm();
    for (int pass = 0; pass < 2; ++pass) {
      const Eigen::VectorXcd c = f.basis.leftCols(j + 1).adjoint() * w;
      w -= f.basis.leftCols(j + 1) * c;
      f.hessenberg.col(j).head(j + 1) += c;
    }
    const double beta = w.norm();
    f.hessenberg(j + 1, j) = beta;
    f.steps = j + 1;
    if (beta <= 1e-14 * std::max(w_norm, 1.0)) {
      f.breakdown = true;
      f.hessenberg(j + 1, j) = 0.0;
      break;
    }
    f.basis.col(j + 1) = w / beta;
    if (stop && stop(f)) break;
  }
  return f;
}

std::vector<RitzPair> ritz_pairs(const ArnoldiFactorization& f, bool with_vectors) {
  const Eigen::Index p = f.steps;
  const Eigen::MatrixXcd h = f.hessenberg.topLeftCorner(p, p);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h, true);
  if (es.info() != Eigen::Success) throw Error("arnoldi: projected eigenproblem failed");
  const double beta = std::abs(f.hessenberg(p, p - 1));
  std::vector<RitzPair> out;
  out.reserve(static_cast<std::size_t>(p));
  for (Eigen::Index i = 0; i < p; ++i) {
    Eigen::VectorXcd y = es.eigenvectors().col(i);
    y.normalize();
    RitzPair r{es.eigenvalues()(i), {}, beta * std::abs(y(p - 1))};
    if (with_vectors) r.vector = f.basis.leftCols(p) * y;
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const RitzPair& a, const RitzPair& b) {
    return std::abs(a.value) > std::abs(b.value);
  });
  return out;
}

GmresResult gmres(const LinearMap& apply, const Vector& b, Eigen::Index restart, double tol,
                  int max_applications) {
  GmresResult out;
  out.x = Vector::Zero(b.size());
  const double b_norm = b.norm();
  if (b_norm == 0.0) return out;
  Vector r = b;
  out.relative_residual = 1.0;
  while (out.relative_residual > tol && out.applications < max_applications) {
    const auto steps = std::min<Eigen::Index>(restart, max_applications - out.applications);
    const auto f = arnoldi(apply, r, steps);
    out.applications += static_cast<int>(f.steps);
    const Eigen::Index p = f.steps;
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(p + 1);
    rhs(0) = r.norm();
    const Eigen::MatrixXcd hbar = f.hessenberg.topLeftCorner(p + 1, p);
    const Eigen::VectorXcd y = hbar.colPivHouseholderQr().solve(rhs);
    out.x += f.basis.leftCols(p) * y;
    r = b - apply(out.x);
    ++out.applications;
    out.relative_residual = r.norm() / b_norm;
    if (f.breakdown) break;
  }
  return out;
}

}  // namespace qumera::channel
