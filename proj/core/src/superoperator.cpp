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

#include "qumera/channel/superoperator.hpp"

#include <cmath>
#include <string>

#include "qumera/channel/network.hpp"
#include "qumera/error.hpp"

namespace qumera::channel {

using tensnet::einsum;

namespace {

void require_operator_shape(const Tensor& t, std::size_t m, const char* what) {
  if (t.shape() != tensnet::Shape{m, m, m, m, m, m}) {
    throw InvariantError(std::string(what) + ": operator dimension does not match ansatz m=" +
                         std::to_string(m));
  }
}

}  // namespace

Tensor descend_raw(const Tensor& rho, const MeraAnsatz& ansatz) {
  require_operator_shape(rho, ansatz.m, "descend");
  tensnet::EagerOps ops;
  const auto sigma = network::four_site_state(ops, rho, ansatz.lambda, ansatz.lambda.conj(),
                                              ansatz.chi, ansatz.chi.conj());
  const auto id = Tensor::identity({ansatz.m});
  auto out = einsum("defgDEFG,gG->defDEF", sigma, id);
  out += einsum("defgDEFG,dD->efgEFG", sigma, id);
  out *= 0.5;
  return out;
}

Tensor ascend_raw(const Tensor& h, const MeraAnsatz& ansatz) {
  require_operator_shape(h, ansatz.m, "ascend");
  const Tensor& u = ansatz.chi;
  const Tensor uc = ansatz.chi.conj();
  const Tensor& w = ansatz.lambda;
  const Tensor wc = ansatz.lambda.conj();

  // Y = U^dagger H4 U on fine sites 2..5.
  auto y = einsum("defgDEFG,deqr->qrfgDEFG", network::four_site_operator(h), uc);
  y = einsum("qrfgDEFG,fgst->qrstDEFG", y, uc);
  y = einsum("qrstDEFG,DEQR->qrstQRFG", y, u);
  y = einsum("qrstQRFG,FGST->qrstQRST", y, u);

  // W^dagger (I (x) Y (x) I) W back to the coarse sites.
  const auto left = einsum("xqa,xQA->qaQA", wc, w);
  const auto right = einsum("tzc,TzC->tcTC", wc, w);
  auto z = einsum("qrstQRST,qaQA->rstaRSTA", y, left);
  z = einsum("rstaRSTA,tcTC->rsacRSAC", z, right);
  z = einsum("rsacRSAC,rsb->abcRSAC", z, wc);
  return einsum("abcRSAC,RSB->abcABC", z, w);
}

DensityMatrix3 descend(const DensityMatrix3& rho, const MeraAnsatz& ansatz) {
  ansatz.validate();
  rho.validate();
  return DensityMatrix3{descend_raw(rho.rho, ansatz)};
}

Operator3 ascend(const Operator3& h, const MeraAnsatz& ansatz) {
  ansatz.validate();
  h.validate();
  return Operator3{ascend_raw(h.op, ansatz), h.hermitian};
}

SuperOperatorMatrix materialize(const MeraAnsatz& ansatz, std::size_t cap) {
  ansatz.validate();
  const std::size_t m = ansatz.m;
  const std::size_t n3 = m * m * m;
  const std::size_t dim = n3 * n3;
  if (dim > cap) {
    throw Error("materialize: m^6 = " + std::to_string(dim) + " exceeds the cap of " +
                std::to_string(cap) + "; use the iterative (Arnoldi) spectrum path instead");
  }
  SuperOperatorMatrix phi{dim, RowMatrix::Zero(static_cast<Eigen::Index>(dim),
                                               static_cast<Eigen::Index>(dim))};
  Tensor basis({m, m, m, m, m, m});
  for (std::size_t j = 0; j < dim; ++j) {
    basis[j] = 1.0;
    const Tensor image = descend_raw(basis, ansatz);
    basis[j] = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      phi.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = image[i];
    }
  }
  return phi;
}

RowMatrix choi_matrix(const SuperOperatorMatrix& phi, std::size_t m) {
  // C[(i,a),(k,b)] = Phi(|i><k|)[a,b] = phi[a*n+b, i*n+k].
  const auto n = static_cast<Eigen::Index>(m * m * m);
  RowMatrix choi(n * n, n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
          choi(i * n + a, k * n + b) = phi.matrix(a * n + b, i * n + k);
        }
      }
    }
  }
  return choi;
}

Energy energy(const MeraAnsatz& ansatz, const DensityMatrix3& rho_star, const Operator3& h) {
  require_operator_shape(rho_star.rho, ansatz.m, "energy");
  require_operator_shape(h.op, ansatz.m, "energy");
  // Tr[rho h] = sum_{kb} rho[k,b] h[b,k]
  const Complex value = (rho_star.matrix().array() * h.matrix().transpose().array()).sum();
  const double scale = std::max(1.0, h.op.norm());
  if (std::abs(value.imag()) > 1e-10 * scale) {
    throw InvariantError("energy: imaginary part " + std::to_string(value.imag()) +
                         " indicates a non-Hermitian state or Hamiltonian");
  }
  Energy e;
  e.per_site = value.real();
  e.per_spin = value.real() / static_cast<double>(std::max(ansatz.blocking, 1));
  return e;
}

}  // namespace qumera::channel
