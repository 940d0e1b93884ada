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

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Core>

namespace qumera::channel {

using Vector = Eigen::VectorXcd;
using LinearMap = std::function<Vector(const Vector&)>;

// A V_p = V_{p+1} H, V orthonormal columns, H upper Hessenberg (p+1) x p.
struct ArnoldiFactorization {
  Eigen::MatrixXcd basis;
  Eigen::MatrixXcd hessenberg;
  Eigen::Index steps = 0;  // fewer than requested after an invariant-subspace breakdown
  bool breakdown = false;
};

// Called after every step; returning true ends the factorisation early.
using ArnoldiStop = std::function<bool(const ArnoldiFactorization&)>;

// Arnoldi with two passes of classical Gram-Schmidt per step.
ArnoldiFactorization arnoldi(const LinearMap& apply, const Vector& start, Eigen::Index steps,
                             const ArnoldiStop& stop = {});

struct RitzPair {
  std::complex<double> value;
  Vector vector;      // in the full space; empty unless requested
  double residual;    // ||A x - theta x|| estimate, |h_{p+1,p}| |y_p|
};

// Ritz pairs of the factorisation, sorted by decreasing modulus.
std::vector<RitzPair> ritz_pairs(const ArnoldiFactorization& f, bool with_vectors);

struct GmresResult {
  Vector x;
  double relative_residual = 0.0;  // ||b - A x|| / ||b||
  int applications = 0;
};

// Restarted GMRES(restart) from x = 0. Stops at relative residual `tol` or
// after `max_applications` operator applications, returning the best iterate
// either way; callers decide whether the residual is good enough.
GmresResult gmres(const LinearMap& apply, const Vector& b, Eigen::Index restart, double tol,
                  int max_applications);

}  // namespace qumera::channel
