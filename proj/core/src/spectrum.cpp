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

#include "qumera/channel/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <lapacke.h>

#include "qumera/channel/krylov.hpp"
#include "qumera/error.hpp"

namespace qumera::channel {

namespace {

void sort_by_modulus(std::vector<Complex>& values) {
  std::stable_sort(values.begin(), values.end(),
                   [](const Complex& a, const Complex& b) { return std::abs(a) > std::abs(b); });
}

std::vector<Complex> arnoldi_spectrum(const MeraAnsatz& ansatz, std::size_t k,
                                      const SpectrumOptions& options) {
  const std::size_t m = ansatz.m;
  const auto n = static_cast<Eigen::Index>(m * m * m * m * m * m);
  const LinearMap op = [&](const Vector& v) {
    Tensor t({m, m, m, m, m, m});
    Eigen::Map<Vector>(t.data().data(), n) = v;
    const Tensor image = descend_raw(t, ansatz);
    return Vector(Eigen::Map<const Vector>(image.data().data(), n));
  };
  tensnet::Rng rng(options.seed);
  Vector start(n);
  for (Eigen::Index i = 0; i < n; ++i) start(i) = rng.complex_normal();

  auto p = std::min<Eigen::Index>(n, std::max<Eigen::Index>(2 * static_cast<Eigen::Index>(k) + 20, 48));
  for (;;) {
    const auto f = arnoldi(op, start, p);
    const auto ritz = ritz_pairs(f, false);
    const std::size_t have = std::min(k, ritz.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < have; ++i) worst = std::max(worst, ritz[i].residual);
    if ((worst <= options.tol && have == k) || f.breakdown || f.steps == n) {
      if (have < k) {
        throw ConvergenceError("spectrum: Krylov space exhausted before reaching k eigenvalues", worst);
      }
      std::vector<Complex> out;
      for (std::size_t i = 0; i < k; ++i) out.push_back(ritz[i].value);
      return out;
    }
    const auto next = std::min<Eigen::Index>(n, 2 * p);
    if (next > static_cast<Eigen::Index>(options.max_krylov) || next == p) {
      std::ostringstream os;
      os << "spectrum: Arnoldi did not converge with " << p << " vectors; residuals:";
      for (std::size_t i = 0; i < have; ++i) os << ' ' << ritz[i].residual;
      throw ConvergenceError(os.str(), worst);
    }
    p = next;
  }
}

}  // namespace

std::vector<Complex> dense_eigenvalues(const RowMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) throw Error("dense_eigenvalues: matrix is not square");
  const auto n = static_cast<lapack_int>(matrix.rows());
  // Row-major storage of A is column-major storage of A^T, which has the same
  // eigenvalues.
  std::vector<lapack_complex_double> a(static_cast<std::size_t>(n) * n);
  std::copy(matrix.data(), matrix.data() + a.size(), reinterpret_cast<Complex*>(a.data()));
  std::vector<lapack_complex_double> w(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, a.data(), n, w.data(),
                                        nullptr, 1, nullptr, 1);
  if (info != 0) throw Error("dense_eigenvalues: zgeev failed with info " + std::to_string(info));
  std::vector<Complex> out(reinterpret_cast<Complex*>(w.data()),
                           reinterpret_cast<Complex*>(w.data()) + w.size());
  sort_by_modulus(out);
  return out;
}

std::vector<Complex> spectrum(const MeraAnsatz& ansatz, std::size_t k, const SpectrumOptions& options) {
  ansatz.validate();
  const std::size_t m = ansatz.m;
  const std::size_t dim = m * m * m * m * m * m;
  if (k == 0 || k > dim) throw Error("spectrum: k must be in [1, m^6]");
  SpectrumMethod method = options.method;
  if (method == SpectrumMethod::kAuto) {
    method = dim <= options.dense_max_dim ? SpectrumMethod::kDense : SpectrumMethod::kArnoldi;
  }
  if (method == SpectrumMethod::kDense) {
    const auto phi = materialize(ansatz, std::max(options.dense_max_dim, dim));
    auto values = dense_eigenvalues(phi.matrix);
    values.resize(k);
    return values;
  }
  return arnoldi_spectrum(ansatz, k, options);
}

}  // namespace qumera::channel
