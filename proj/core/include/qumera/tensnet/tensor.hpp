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
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace qumera::tensnet {

using Complex = std::complex<double>;
using Shape = std::vector<std::size_t>;

using RowMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MatrixMap = Eigen::Map<RowMatrix>;
using ConstMatrixMap = Eigen::Map<const RowMatrix>;

// Dense complex tensor, row-major with respect to its shape. A rank-0 tensor
// holds a single scalar.
class Tensor {
 public:
  Tensor() : data_(1, Complex{}) {}
  explicit Tensor(Shape shape);
  Tensor(Shape shape, std::vector<Complex> data);

  static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
  static Tensor scalar(Complex value);
  // Square identity with the given row legs; shape is rows ++ rows.
  static Tensor identity(const Shape& row_legs);
  // Rank-2 tensor copied from a matrix.
  static Tensor from_matrix(const RowMatrix& matrix);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t dim(std::size_t leg) const { return shape_.at(leg); }
  std::size_t size() const noexcept { return data_.size(); }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  Complex& operator[](std::size_t flat) { return data_[flat]; }
  const Complex& operator[](std::size_t flat) const { return data_[flat]; }
  Complex& at(std::initializer_list<std::size_t> index);
  const Complex& at(std::initializer_list<std::size_t> index) const;
  std::size_t flat_index(std::span<const std::size_t> index) const;

  // Same data, new shape with the same element count.
  Tensor reshaped(Shape shape) const&;
  Tensor reshaped(Shape shape) &&;

  // Matrix view that groups the first `row_legs` legs into rows.
  MatrixMap matrix(std::size_t row_legs);
  ConstMatrixMap matrix(std::size_t row_legs) const;

  Tensor conj() const;
  double norm() const;  // Frobenius
  bool all_finite() const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(Complex factor);

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, Complex s) { return a *= s; }
  friend Tensor operator*(Complex s, Tensor a) { return a *= s; }

  bool operator==(const Tensor& other) const = default;

 private:
  Shape shape_;
  std::vector<Complex> data_;
};

std::size_t shape_volume(const Shape& shape);

// Pairs of (leg of a, leg of b) to be summed over. The surviving legs are
// numbered free-legs-of-a then free-legs-of-b, each in original order;
// `output_order[i]` names the surviving leg placed at position i. An empty
// output_order means natural order.
struct ContractionSpec {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> output_order;
};

Tensor contract(const Tensor& a, const Tensor& b, const ContractionSpec& spec);

// Result leg i is input leg order[i].
Tensor permute(const Tensor& a, std::span<const std::size_t> order);
Tensor permute(const Tensor& a, std::initializer_list<std::size_t> order);

// Label notation on top of contract(), e.g. einsum("abc,cd->dab", x, y).
// Every label must occur exactly twice across the three terms, and never twice
// within one input.
Tensor einsum(std::string_view expr, const Tensor& a, const Tensor& b);

// Sum over the diagonal of legs (i, j), which must have equal dimension.
Tensor trace_legs(const Tensor& a, std::size_t i, std::size_t j);

// Frobenius inner product sum(conj(a) * b).
Complex inner(const Tensor& a, const Tensor& b);

// Throws InvariantError if any entry is NaN or infinite.
void require_finite(const Tensor& t, std::string_view context);

}  // namespace qumera::tensnet
