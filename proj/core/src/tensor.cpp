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

#include "qumera/tensnet/tensor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "qumera/error.hpp"

namespace qumera::tensnet {

std::size_t shape_volume(const Shape& shape) {
  std::size_t n = 1;
  for (auto d : shape) n *= d;
  return n;
}

namespace {

void check_shape(const Shape& shape) {
  for (auto d : shape) {
    if (d == 0) throw SpecError("tensor dimensions must be >= 1");
  }
}

std::vector<std::size_t> strides_of(const Shape& shape) {
  std::vector<std::size_t> s(shape.size(), 1);
  for (std::size_t i = shape.size(); i-- > 1;) s[i - 1] = s[i] * shape[i];
  return s;
}

bool is_identity(std::span<const std::size_t> order) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] != i) return false;
  }
  return true;
}

}  // namespace

Tensor::Tensor(Shape shape) : shape_(std::move(shape)) {
  check_shape(shape_);
  data_.assign(shape_volume(shape_), Complex{});
}

Tensor::Tensor(Shape shape, std::vector<Complex> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
  check_shape(shape_);
  if (data_.size() != shape_volume(shape_)) {
    throw SpecError("tensor data length " + std::to_string(data_.size()) +
                    " does not match shape volume " + std::to_string(shape_volume(shape_)));
  }
}

Tensor Tensor::scalar(Complex value) { return Tensor({}, {value}); }

Tensor Tensor::identity(const Shape& row_legs) {
  Shape shape = row_legs;
  shape.insert(shape.end(), row_legs.begin(), row_legs.end());
  Tensor t(std::move(shape));
  const std::size_t n = shape_volume(row_legs);
  for (std::size_t i = 0; i < n; ++i) t.data_[i * n + i] = 1.0;
  return t;
}

Tensor Tensor::from_matrix(const RowMatrix& matrix) {
  Tensor t({static_cast<std::size_t>(matrix.rows()), static_cast<std::size_t>(matrix.cols())});
  t.matrix(1) = matrix;
  return t;
}

std::size_t Tensor::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) throw SpecError("index rank mismatch");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] >= shape_[i]) throw SpecError("index out of range");
    flat = flat * shape_[i] + index[i];
  }
  return flat;
}

Complex& Tensor::at(std::initializer_list<std::size_t> index) {
  return data_[flat_index(std::span<const std::size_t>(index.begin(), index.size()))];
}

const Complex& Tensor::at(std::initializer_list<std::size_t> index) const {
  return data_[flat_index(std::span<const std::size_t>(index.begin(), index.size()))];
}

Tensor Tensor::reshaped(Shape shape) const& {
  Tensor copy = *this;
  return std::move(copy).reshaped(std::move(shape));
}

Tensor Tensor::reshaped(Shape shape) && {
  check_shape(shape);
  if (shape_volume(shape) != data_.size()) throw SpecError("reshape changes element count");
  shape_ = std::move(shape);
  return std::move(*this);
}

MatrixMap Tensor::matrix(std::size_t row_legs) {
  if (row_legs > shape_.size()) throw SpecError("matrix view: too many row legs");
  const std::size_t rows = std::accumulate(shape_.begin(), shape_.begin() + row_legs,
                                           std::size_t{1}, std::multiplies<>());
  return MatrixMap(data_.data(), static_cast<Eigen::Index>(rows),
                   static_cast<Eigen::Index>(data_.size() / rows));
}

ConstMatrixMap Tensor::matrix(std::size_t row_legs) const {
  if (row_legs > shape_.size()) throw SpecError("matrix view: too many row legs");
  const std::size_t rows = std::accumulate(shape_.begin(), shape_.begin() + row_legs,
                                           std::size_t{1}, std::multiplies<>());
  return ConstMatrixMap(data_.data(), static_cast<Eigen::Index>(rows),
                        static_cast<Eigen::Index>(data_.size() / rows));
}

Tensor Tensor::conj() const {
  Tensor out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

double Tensor::norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool Tensor::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (other.shape_ != shape_) throw SpecError("shape mismatch in addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  if (other.shape_ != shape_) throw SpecError("shape mismatch in subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(Complex factor) {
  for (auto& z : data_) z *= factor;
  return *this;
}

void require_finite(const Tensor& t, std::string_view context) {
  if (!t.all_finite()) {
    throw InvariantError(std::string(context) + ": non-finite tensor entry");
  }
}

Tensor permute(const Tensor& a, std::span<const std::size_t> order) {
  const std::size_t r = a.rank();
  if (order.size() != r) throw SpecError("permutation length does not match tensor rank");
  std::vector<bool> seen(r, false);
  for (auto o : order) {
    if (o >= r || seen[o]) throw SpecError("invalid permutation");
    seen[o] = true;
  }
  if (is_identity(order)) return a;

  Shape out_shape(r);
  for (std::size_t i = 0; i < r; ++i) out_shape[i] = a.dim(order[i]);
  const auto in_strides = strides_of(a.shape());
  std::vector<std::size_t> step(r);
  for (std::size_t i = 0; i < r; ++i) step[i] = in_strides[order[i]];

  Tensor out(out_shape);
  auto src = a.data();
  auto dst = out.data();
  std::vector<std::size_t> counter(r, 0);
  std::size_t offset = 0;
  // Innermost output leg is walked in a tight loop.
  const std::size_t inner_dim = out_shape[r - 1];
  const std::size_t inner_step = step[r - 1];
  for (std::size_t flat = 0; flat < dst.size(); flat += inner_dim) {
    for (std::size_t k = 0; k < inner_dim; ++k) dst[flat + k] = src[offset + k * inner_step];
    for (std::size_t leg = r - 1; leg-- > 0;) {
      offset += step[leg];
      if (++counter[leg] < out_shape[leg]) break;
      offset -= step[leg] * out_shape[leg];
      counter[leg] = 0;
    }
  }
  return out;
}

Tensor permute(const Tensor& a, std::initializer_list<std::size_t> order) {
  return permute(a, std::span<const std::size_t>(order.begin(), order.size()));
}

namespace {

std::string leg_list(const std::vector<std::size_t>& legs) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < legs.size(); ++i) os << (i ? "," : "") << legs[i];
  os << ')';
  return os.str();
}

// Arranges `t` as a matrix with `lead` legs grouped on one side and `trail`
// on the other, in the given orders. Returns whether the natural storage can
// be used directly (possibly transposed) or a permuted copy was made.
struct MatrixOperand {
  const Tensor* external;  // null when `storage` holds a permuted copy
  Tensor storage;
  bool transposed;
  Eigen::Index rows;  // of the logical (lead x trail) matrix
  Eigen::Index cols;
};

MatrixOperand arrange(const Tensor& t, const std::vector<std::size_t>& lead,
                      const std::vector<std::size_t>& trail) {
  std::vector<std::size_t> want = lead;
  want.insert(want.end(), trail.begin(), trail.end());
  std::vector<std::size_t> swapped = trail;
  swapped.insert(swapped.end(), lead.begin(), lead.end());
  Eigen::Index rows = 1, cols = 1;
  for (auto l : lead) rows *= static_cast<Eigen::Index>(t.dim(l));
  for (auto l : trail) cols *= static_cast<Eigen::Index>(t.dim(l));
  if (is_identity(want)) return {&t, {}, false, rows, cols};
  if (is_identity(swapped)) return {&t, {}, true, rows, cols};
  return {nullptr, permute(t, want), false, rows, cols};
}

ConstMatrixMap stored_map(const MatrixOperand& op) {
  const auto r = op.transposed ? op.cols : op.rows;
  const auto c = op.transposed ? op.rows : op.cols;
  const Tensor& src = op.external ? *op.external : op.storage;
  return ConstMatrixMap(src.data().data(), r, c);
}

}  // namespace

Tensor contract(const Tensor& a, const Tensor& b, const ContractionSpec& spec) {
  std::vector<bool> used_a(a.rank(), false), used_b(b.rank(), false);
  auto pairs = spec.pairs;
  for (const auto& [ia, ib] : pairs) {
    if (ia >= a.rank() || ib >= b.rank()) {
      throw SpecError("contraction pair " + leg_list({ia, ib}) + " out of range");
    }
    if (used_a[ia] || used_b[ib]) {
      throw SpecError("contraction pair " + leg_list({ia, ib}) + " reuses a leg");
    }
    if (a.dim(ia) != b.dim(ib)) {
      throw SpecError("contraction pair " + leg_list({ia, ib}) + " has mismatched dimensions " +
                      std::to_string(a.dim(ia)) + " vs " + std::to_string(b.dim(ib)));
    }
    used_a[ia] = used_b[ib] = true;
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<std::size_t> free_a, free_b, paired_a, paired_b;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (!used_a[i]) free_a.push_back(i);
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    if (!used_b[i]) free_b.push_back(i);
  }
  for (const auto& [ia, ib] : pairs) {
    paired_a.push_back(ia);
    paired_b.push_back(ib);
  }

  const std::size_t n_out = free_a.size() + free_b.size();
  std::vector<std::size_t> order = spec.output_order;
  if (order.empty()) {
    order.resize(n_out);
    std::iota(order.begin(), order.end(), 0);
  }
  if (order.size() != n_out) throw SpecError("output order does not cover surviving legs");
  {
    std::vector<bool> seen(n_out, false);
    for (auto o : order) {
      if (o >= n_out || seen[o]) throw SpecError("output order is not a permutation");
      seen[o] = true;
    }
  }

  Shape natural_shape;
  for (auto l : free_a) natural_shape.push_back(a.dim(l));
  for (auto l : free_b) natural_shape.push_back(b.dim(l));

  // b-legs-first output can be produced directly as the transposed product.
  std::vector<std::size_t> swapped_order;
  for (std::size_t i = 0; i < free_b.size(); ++i) swapped_order.push_back(free_a.size() + i);
  for (std::size_t i = 0; i < free_a.size(); ++i) swapped_order.push_back(i);
  const bool want_swapped = !free_a.empty() && !free_b.empty() && order == swapped_order;

  const MatrixOperand A = arrange(a, free_a, paired_a);  // rows: free_a
  const MatrixOperand B = arrange(b, paired_b, free_b);  // rows: paired
  const auto Am = stored_map(A);
  const auto Bm = stored_map(B);

  Shape out_shape;
  if (want_swapped) {
    for (auto l : free_b) out_shape.push_back(b.dim(l));
    for (auto l : free_a) out_shape.push_back(a.dim(l));
  } else {
    out_shape = natural_shape;
  }
  Tensor out(out_shape);
  if (want_swapped) {
    MatrixMap C(out.data().data(), B.cols, A.rows);
    if (A.transposed && B.transposed) C.noalias() = Bm * Am;
    else if (A.transposed) C.noalias() = Bm.transpose() * Am;
    else if (B.transposed) C.noalias() = Bm * Am.transpose();
    else C.noalias() = Bm.transpose() * Am.transpose();
  } else {
    MatrixMap C(out.data().data(), A.rows, B.cols);
    if (A.transposed && B.transposed) C.noalias() = Am.transpose() * Bm.transpose();
    else if (A.transposed) C.noalias() = Am.transpose() * Bm;
    else if (B.transposed) C.noalias() = Am * Bm.transpose();
    else C.noalias() = Am * Bm;
  }
  if (!want_swapped) out = permute(out, order);
  require_finite(out, "contract");
  return out;
}

Tensor einsum(std::string_view expr, const Tensor& a, const Tensor& b) {
  const auto comma = expr.find(',');
  const auto arrow = expr.find("->");
  if (comma == std::string_view::npos || arrow == std::string_view::npos || comma > arrow) {
    throw SpecError("einsum expression must look like 'ab,bc->ac': " + std::string(expr));
  }
  const auto la = expr.substr(0, comma);
  const auto lb = expr.substr(comma + 1, arrow - comma - 1);
  const auto lc = expr.substr(arrow + 2);
  if (la.size() != a.rank() || lb.size() != b.rank()) {
    throw SpecError("einsum labels do not match tensor ranks: " + std::string(expr));
  }
  ContractionSpec spec;
  std::string surviving;
  for (std::size_t i = 0; i < la.size(); ++i) {
    const auto j = lb.find(la[i]);
    if (j != std::string_view::npos) {
      spec.pairs.emplace_back(i, j);
    } else {
      surviving.push_back(la[i]);
    }
  }
  for (std::size_t j = 0; j < lb.size(); ++j) {
    if (la.find(lb[j]) == std::string_view::npos) surviving.push_back(lb[j]);
  }
  if (surviving.size() != lc.size()) {
    throw SpecError("einsum output labels do not match surviving labels: " + std::string(expr));
  }
  for (char c : lc) {
    const auto pos = surviving.find(c);
    if (pos == std::string::npos) {
      throw SpecError(std::string("einsum output label '") + c + "' not found: " + std::string(expr));
    }
    spec.output_order.push_back(pos);
  }
  return contract(a, b, spec);
}

Tensor trace_legs(const Tensor& a, std::size_t i, std::size_t j) {
  if (i == j || i >= a.rank() || j >= a.rank() || a.dim(i) != a.dim(j)) {
    throw SpecError("trace_legs: invalid leg pair");
  }
  std::vector<std::size_t> order;
  for (std::size_t l = 0; l < a.rank(); ++l) {
    if (l != i && l != j) order.push_back(l);
  }
  order.push_back(i);
  order.push_back(j);
  const Tensor p = permute(a, order);
  const std::size_t d = a.dim(i);
  Shape out_shape;
  for (std::size_t l = 0; l + 2 < order.size(); ++l) out_shape.push_back(a.dim(order[l]));
  Tensor out(out_shape);
  const std::size_t block = d * d;
  for (std::size_t o = 0; o < out.size(); ++o) {
    Complex s{};
    for (std::size_t k = 0; k < d; ++k) s += p[o * block + k * d + k];
    out[o] = s;
  }
  return out;
}

Complex inner(const Tensor& a, const Tensor& b) {
  if (a.shape() != b.shape()) throw SpecError("inner: shape mismatch");
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace qumera::tensnet
