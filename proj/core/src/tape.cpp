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

#include "qumera/tensnet/tape.hpp"

#include "qumera/error.hpp"

namespace qumera::tensnet {

Tape::Handle Tape::leaf(Tensor value) {
  nodes_.push_back(Node{std::move(value), {}, {}, {}, 0, 0, true});
  return nodes_.size() - 1;
}

Tape::Handle Tape::einsum(std::string_view expr, Handle a, Handle b) {
  if (a >= nodes_.size() || b >= nodes_.size()) throw SpecError("tape: unknown handle");
  const auto comma = expr.find(',');
  const auto arrow = expr.find("->");
  if (comma == std::string_view::npos || arrow == std::string_view::npos) {
    throw SpecError("tape: malformed einsum expression");
  }
  Node node;
  node.value = tensnet::einsum(expr, nodes_[a].value, nodes_[b].value);
  node.a_labels = std::string(expr.substr(0, comma));
  node.b_labels = std::string(expr.substr(comma + 1, arrow - comma - 1));
  node.out_labels = std::string(expr.substr(arrow + 2));
  node.a = a;
  node.b = b;
  node.is_leaf = false;
  nodes_.push_back(std::move(node));
  return nodes_.size() - 1;
}

std::vector<Tensor> Tape::backward(Handle output, const Tensor& seed) const {
  if (output >= nodes_.size()) throw SpecError("tape: unknown output handle");
  if (seed.shape() != nodes_[output].value.shape()) throw SpecError("tape: seed shape mismatch");
  std::vector<Tensor> adj;
  std::vector<bool> touched(nodes_.size(), false);
  adj.reserve(nodes_.size());
  for (const auto& n : nodes_) adj.push_back(Tensor::zeros(n.value.shape()));
  adj[output] = seed;
  touched[output] = true;

  auto accumulate = [&](Handle h, Tensor g) {
    if (touched[h]) {
      adj[h] += g;
    } else {
      adj[h] = std::move(g);
      touched[h] = true;
    }
  };

  for (Handle h = output + 1; h-- > 0;) {
    const Node& n = nodes_[h];
    if (n.is_leaf || !touched[h]) continue;
    const std::string to_a = n.out_labels + "," + n.b_labels + "->" + n.a_labels;
    const std::string to_b = n.out_labels + "," + n.a_labels + "->" + n.b_labels;
    accumulate(n.a, tensnet::einsum(to_a, adj[h], nodes_[n.b].value));
    accumulate(n.b, tensnet::einsum(to_b, adj[h], nodes_[n.a].value));
  }
  return adj;
}

}  // namespace qumera::tensnet
