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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "qumera/tensnet/rng.hpp"
#include "qumera/tensnet/tensor.hpp"

namespace qumera::channel {

using tensnet::Complex;
using tensnet::RowMatrix;
using tensnet::Tensor;

inline constexpr double kIsometryTolerance = 1e-10;

// One homogeneous binary MERA layer.
//
//   chi    [out1, out2, in1, in2]   disentangler, unitary as (out) x (in)
//   lambda [low1, low2, up]         isometry, lambda^dagger lambda = I_m
//
// `blocking` is the number of physical spins grouped into one effective site
// (m = 2^blocking for the spin models); it only enters energy-per-spin
// conversion.
struct MeraAnsatz {
  std::size_t m = 0;
  int blocking = 1;
  Tensor chi;
  Tensor lambda;

  static MeraAnsatz random(std::size_t m, int blocking, tensnet::Rng& rng);

  double chi_defect() const;     // max(||chi^+ chi - I||, ||chi chi^+ - I||)
  double lambda_defect() const;  // ||lambda^+ lambda - I_m||
  // Throws InvariantError when shapes or isometry constraints are violated.
  void validate(double tol = kIsometryTolerance) const;
};

// Three-site density operator, stored as [k1 k2 k3 b1 b2 b3].
struct DensityMatrix3 {
  Tensor rho;

  std::size_t m() const { return rho.dim(0); }
  std::size_t dim() const { return rho.dim(0) * rho.dim(1) * rho.dim(2); }
  tensnet::ConstMatrixMap matrix() const { return rho.matrix(3); }

  static DensityMatrix3 from_matrix(const RowMatrix& matrix, std::size_t m);
  static DensityMatrix3 maximally_mixed(std::size_t m);
  // Normalised G G^dagger with complex Gaussian G.
  static DensityMatrix3 random(std::size_t m, tensnet::Rng& rng);

  double hermiticity_defect() const;
  Complex trace() const;
  double min_eigenvalue() const;
  // Hermitian to 1e-10, unit trace to 1e-10, eigenvalues >= -1e-9.
  void validate() const;
};

// Three-site operator, stored as [k1 k2 k3 b1 b2 b3].
struct Operator3 {
  Tensor op;
  bool hermitian = true;

  std::size_t m() const { return op.dim(0); }
  tensnet::ConstMatrixMap matrix() const { return op.matrix(3); }

  static Operator3 from_matrix(const RowMatrix& matrix, std::size_t m, bool hermitian = true);
  static Operator3 identity(std::size_t m);
  static Operator3 zero(std::size_t m);

  void validate() const;
};

// Hermitian part with the trace scaled to one.
DensityMatrix3 normalize_density(const Tensor& rho);

// Checkpoint: one text header line
//   qumera-ansatz m=<m> b=<b> seed=<seed> iteration=<n>
// followed by the chi and lambda QMT1 tensor records.
struct CheckpointInfo {
  std::uint64_t seed = 0;
  std::uint64_t iteration = 0;
};

void save_checkpoint(const std::string& path, const MeraAnsatz& ansatz, const CheckpointInfo& info);
MeraAnsatz load_checkpoint(const std::string& path, CheckpointInfo* info = nullptr);

}  // namespace qumera::channel
