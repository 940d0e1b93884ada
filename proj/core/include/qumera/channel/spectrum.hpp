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
#include <vector>

#include "qumera/channel/ansatz.hpp"
#include "qumera/channel/superoperator.hpp"

namespace qumera::channel {

enum class SpectrumMethod {
  kAuto,     // dense when m^6 <= dense_max_dim, Arnoldi otherwise
  kDense,
  kArnoldi,
};

struct SpectrumOptions {
  SpectrumMethod method = SpectrumMethod::kAuto;
  std::size_t dense_max_dim = kDefaultMaterializeCap;
  double tol = 1e-10;               // Ritz residual for the k wanted pairs
  std::size_t max_krylov = 1024;    // largest Arnoldi subspace tried
  std::uint64_t seed = 0x51ec7a11;  // Arnoldi start vector
};

// The k largest-modulus eigenvalues of descend, by decreasing modulus.
std::vector<Complex> spectrum(const MeraAnsatz& ansatz, std::size_t k, const SpectrumOptions& options = {});

// All eigenvalues of a dense matrix by decreasing modulus (LAPACK zgeev).
std::vector<Complex> dense_eigenvalues(const RowMatrix& matrix);

}  // namespace qumera::channel
