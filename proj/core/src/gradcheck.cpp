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

#include "qumera/opt/gradcheck.hpp"

#include <algorithm>
#include <cmath>

#include "qumera/channel/superoperator.hpp"

namespace qumera::opt {

namespace {

double linear_energy(const MeraAnsatz& ansatz, const DensityMatrix3& rho, const Operator3& h) {
  const Tensor image = channel::descend_raw(rho.rho, ansatz);
  return tensnet::einsum("abcABC,ABCabc->", image, h.op).data()[0].real();
}

}  // namespace

std::vector<DirectionCheck> gradient_check(const MeraAnsatz& ansatz, const DensityMatrix3& rho,
                                           const Operator3& h, Target target, tensnet::Rng& rng,
                                           const GradcheckOptions& options, const Tensor* gradient_override) {
  const Tensor grad = gradient_override ? *gradient_override : linearized_gradient(ansatz, rho, h, target);
  const Tensor& base = target == Target::kChi ? ansatz.chi : ansatz.lambda;
  std::vector<DirectionCheck> out;
  for (std::size_t d = 0; d < options.directions; ++d) {
    Tensor dir(base.shape());
    for (auto& z : dir.data()) z = rng.complex_normal();
    dir *= 1.0 / dir.norm();

    const auto shifted = [&](double t) {
      MeraAnsatz a = ansatz;
      (target == Target::kChi ? a.chi : a.lambda) = base + dir * tensnet::Complex{t};
      return linear_energy(a, rho, h);
    };
    DirectionCheck c;
    c.index = d;
    c.analytic = tensnet::inner(grad, dir).real();
    c.numeric = (shifted(options.step) - shifted(-options.step)) / (2.0 * options.step);
    const double scale = std::max(std::abs(c.analytic), std::abs(c.numeric));
    c.rel_err = scale <= options.zero_floor ? 0.0 : std::abs(c.analytic - c.numeric) / scale;
    out.push_back(c);
  }
  return out;
}

}  // namespace qumera::opt
