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

// One-layer causal-cone network of the homogeneous binary MERA.
//
// Three coarse sites (a b c) sit above six fine sites 1..6. Each coarse site is
// split by an isometry into two fine sites, then disentanglers act on the
// fine pairs (2,3) and (4,5):
//
//          a             b             c            coarse
//          |             |             |
//       [lambda]      [lambda]      [lambda]
//        /    \        /    \        /    \   split
//       1      2      3      4      5      6        after isometries
//              [  chi  ]     [  chi  ]
//              2      3      4      5               after disentanglers
//
// A three-site window of the fine chain sits either on (2,3,4) or on (3,4,5);
// every other placement is a translate of one of these. The descending map
// averages the two, each obtained by tracing the other fine sites of the
// four-site state on (2,3,4,5). Sites 1 and 6 never meet a disentangler.
//
// Letters used below: coarse ket a b c / bra A B C; fine ket after isometries
// q r s t (sites 2..5) / bra Q R S T; after disentanglers d e f g / D E F G;
// x and z are the traced outer legs of sites 1 and 6.

#include "qumera/tensnet/tape.hpp"
#include "qumera/tensnet/tensor.hpp"

namespace qumera::channel::network {

// Four-site state on fine sites 2..5, [d e f g D E F G]. The tensors enter as
// separate ket/bra handles so a Tape can differentiate each copy.
template <class Ops>
typename Ops::Handle four_site_state(Ops& ops, const typename Ops::Handle& rho,
                                     const typename Ops::Handle& lam,
                                     const typename Ops::Handle& lam_conj,
                                     const typename Ops::Handle& chi,
                                     const typename Ops::Handle& chi_conj) {
  // Outer isometry legs are traced first, which keeps every intermediate at
  // most m^8 entries and every step at most m^10 operations.
  auto left = ops.einsum("xqa,xQA->qaQA", lam, lam_conj);
  auto right = ops.einsum("tzc,TzC->tcTC", lam, lam_conj);
  auto t = ops.einsum("abcABC,qaQA->qbcQBC", rho, left);
  t = ops.einsum("qbcQBC,tcTC->qbtQBT", t, right);
  t = ops.einsum("qbtQBT,rsb->qrstQBT", t, lam);
  t = ops.einsum("qrstQBT,RSB->qrstQRST", t, lam_conj);
  t = ops.einsum("qrstQRST,deqr->destQRST", t, chi);
  t = ops.einsum("destQRST,DEQR->destDEST", t, chi_conj);
  t = ops.einsum("destDEST,fgst->defgDEST", t, chi);
  return ops.einsum("defgDEST,FGST->defgDEFG", t, chi_conj);
}

// Four-site energy operator: half of h on (2,3,4) plus half on (3,4,5), so
// that Tr[sigma H4] = Tr[descend(rho) h].
inline tensnet::Tensor four_site_operator(const tensnet::Tensor& h) {
  const std::size_t m = h.dim(0);
  const auto id = tensnet::Tensor::identity({m});
  auto left = tensnet::einsum("defDEF,gG->defgDEFG", h, id);
  auto right = tensnet::einsum("dD,efgEFG->defgDEFG", id, h);
  return (left + right) * tensnet::Complex{0.5};
}

// Tr[descend(rho) h] as a rank-0 tensor, h4 from four_site_operator().
template <class Ops>
typename Ops::Handle energy_term(Ops& ops, const typename Ops::Handle& rho,
                                 const typename Ops::Handle& lam,
                                 const typename Ops::Handle& lam_conj,
                                 const typename Ops::Handle& chi,
                                 const typename Ops::Handle& chi_conj,
                                 const typename Ops::Handle& h4) {
  auto sigma = four_site_state(ops, rho, lam, lam_conj, chi, chi_conj);
  return ops.einsum("defgDEFG,DEFGdefg->", sigma, h4);
}

}  // namespace qumera::channel::network
