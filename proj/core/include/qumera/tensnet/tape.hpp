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
#include <string>
#include <string_view>
#include <vector>

#include "qumera/tensnet/tensor.hpp"

namespace qumera::tensnet {

// Records a chain of pairwise einsum contractions and propagates adjoints back
// through it. Contractions are complex-bilinear, so the adjoints are plain
// (holomorphic) derivatives: a tensor and its complex conjugate must enter the
// network as two separate leaves.
class Tape {
 public:
  using Handle = std::size_t;

  Handle leaf(Tensor value);
  Handle einsum(std::string_view expr, Handle a, Handle b);

  const Tensor& value(Handle h) const { return nodes_.at(h).value; }
  std::size_t size() const noexcept { return nodes_.size(); }

  // d(output)/d(node) for every recorded node, given d(loss)/d(output) = seed.
  // Nodes that do not feed `output` get a zero tensor.
  std::vector<Tensor> backward(Handle output, const Tensor& seed) const;

 private:
  struct Node {
    Tensor value;
    std::string a_labels, b_labels, out_labels;
    Handle a = 0, b = 0;
    bool is_leaf = true;
  };
  std::vector<Node> nodes_;
};

// Forwards einsum to eager tensors. Shares a call signature with Tape so a
// network can be written once as a template over the two.
struct EagerOps {
  using Handle = Tensor;
  Tensor leaf(Tensor value) { return value; }
  Tensor einsum(std::string_view expr, const Tensor& a, const Tensor& b) {
    return tensnet::einsum(expr, a, b);
  }
  const Tensor& value(const Tensor& h) const { return h; }
};

}  // namespace qumera::tensnet
