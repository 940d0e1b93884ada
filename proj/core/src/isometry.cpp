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

#include "qumera/tensnet/isometry.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/SVD>

#include "qumera/error.hpp"

namespace qumera::tensnet {

namespace {

std::vector<std::size_t> rows_first_order(const Tensor& a, const std::vector<std::size_t>& row_legs) {
  std::vector<bool> is_row(a.rank(), false);
  for (auto l : row_legs) {
    if (l >= a.rank() || is_row[l]) throw SpecError("retract_isometry: invalid row legs");
    is_row[l] = true;
  }
  std::vector<std::size_t> order = row_legs;
  for (std::size_t l = 0; l < a.rank(); ++l) {
    if (!is_row[l]) order.push_back(l);
  }
  return order;
}

std::vector<std::size_t> inverse(const std::vector<std::size_t>& order) {
  std::vector<std::size_t> inv(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) inv[order[i]] = i;
  return inv;
}

RowMatrix polar_factor(const RowMatrix& m) {
  if (m.rows() < m.cols()) {
    throw SpecError("retract_isometry: matrix has fewer rows (" + std::to_string(m.rows()) +
                    ") than columns (" + std::to_string(m.cols()) + ")");
  }
  Eigen::JacobiSVD<RowMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  const double smax = s.size() ? s(0) : 0.0;
  if (s.size() && (smax == 0.0 || s(s.size() - 1) <= kRankTolerance * smax)) {
    std::ostringstream os;
    os << "retract_isometry: rank-deficient matrix, singular values below "
       << kRankTolerance << " x max:";
    for (Eigen::Index i = 0; i < s.size(); ++i) {
      if (smax == 0.0 || s(i) <= kRankTolerance * smax) os << ' ' << s(i);
    }
    throw RankDeficientError(os.str());
  }
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

Tensor retract_isometry(const Tensor& a, const std::vector<std::size_t>& row_legs) {
  require_finite(a, "retract_isometry");
  const auto order = rows_first_order(a, row_legs);
  Tensor p = permute(a, order);
  auto view = p.matrix(row_legs.size());
  const RowMatrix w = polar_factor(view);
  view = w;
  return permute(p, inverse(order));
}

Tensor random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows < cols) {
    throw SpecError("random_isometry: rows (" + std::to_string(rows) + ") < cols (" +
                    std::to_string(cols) + ")");
  }
  Tensor g({rows, cols});
  for (auto& z : g.data()) z = rng.complex_normal();
  return retract_isometry(g, {0});
}

double isometry_defect(const Tensor& w, std::size_t row_legs) {
  const auto m = w.matrix(row_legs);
  const RowMatrix gram = m.adjoint() * m;
  return (gram - RowMatrix::Identity(gram.rows(), gram.cols())).norm();
}

Tensor project_tangent(const Tensor& w, const Tensor& g, std::size_t row_legs) {
  if (w.shape() != g.shape()) throw SpecError("project_tangent: shape mismatch");
  const auto W = w.matrix(row_legs);
  const auto G = g.matrix(row_legs);
  const RowMatrix wg = W.adjoint() * G;
  const RowMatrix herm = 0.5 * (wg + wg.adjoint());
  Tensor out = g;
  out.matrix(row_legs) = G - W * herm;
  return out;
}

}  // namespace qumera::tensnet
