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

#include "qumera/models/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qumera/error.hpp"
#include "qumera/models/ed.hpp"

namespace qumera::models {

namespace {

double quadratic_fit_at_zero(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = x[static_cast<std::size_t>(i)];
    A(i, 0) = 1.0;
    A(i, 1) = t;
    A(i, 2) = t * t;
    rhs(i) = y[static_cast<std::size_t>(i)];
  }
  return A.colPivHouseholderQr().solve(rhs)(0);
}

}  // namespace

std::optional<double> ExactReference::nu(char label) const {
  for (const auto& e : exponents) {
    if (e.label == label) return e.nu;
  }
  return std::nullopt;
}

ExactReference exact_exponents(const ModelPreset& preset) {
  preset.validate();
  ExactReference ref;
  ref.model = preset.name();
  if (preset.kind == PresetKind::kIsingCritical) {
    ref.exponents = {{'x', 0.25}, {'z', 2.0}, {'y', 2.25}};
  } else {
    const double nx = 1.0 - std::acos(preset.params.delta) / std::numbers::pi;
    if (!(nx > 0.0)) {
      throw InvariantError("exact_exponents: delta=" + std::to_string(preset.params.delta) +
                           " gives a non-positive exponent");
    }
    ref.exponents = {{'x', nx}, {'y', nx}, {'z', 1.0 / nx}};
    std::stable_sort(ref.exponents.begin(), ref.exponents.end(),
                     [](const ExactExponent& a, const ExactExponent& b) { return a.nu < b.nu; });
  }
  ref.provenance = "closed-form critical exponents";
  return ref;
}

double free_fermion_energy(const SpinModelParams& params) {
  params.validate();
  if (params.delta != 0.0) throw InvariantError("free_fermion_energy: requires delta = 0");
  const double b = params.b_field, g = params.gamma;
  const auto dispersion = [b, g](double k) {
    const double c = b - std::cos(k), s = g * std::sin(k);
    return std::sqrt(c * c + s * s);
  };
  // Split at the points where the dispersion may have kinks.
  std::vector<double> cuts = {0.0, 0.5 * std::numbers::pi, std::numbers::pi, 1.5 * std::numbers::pi,
                              2.0 * std::numbers::pi};
  if (std::abs(b) <= 1.0) {
    const double k0 = std::acos(b);
    cuts.push_back(k0);
    cuts.push_back(2.0 * std::numbers::pi - k0);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] <= 0.0) continue;
    total += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(dispersion, cuts[i], cuts[i + 1], 15,
                                                                           1e-14);
  }
  return -std::abs(params.J) * total / (2.0 * std::numbers::pi);
}

EnergyExtrapolation ed_extrapolate(const SpinModelParams& params, std::size_t max_L) {
  if (max_L < 12 || max_L > kMaxEdSites) {
    throw InvariantError("ed_extrapolate: max_L must be in [12, " + std::to_string(kMaxEdSites) + "]");
  }
  EnergyExtrapolation out;
  std::vector<double> x;
  for (std::size_t L = 8; L <= max_L; L += 2) {
    const auto ed = ed_oracle(params, L);
    out.sizes.push_back(L);
    out.per_spin.push_back(ed.ground_energy / static_cast<double>(L));
    x.push_back(1.0 / static_cast<double>(L * L));
  }
  out.energy = quadratic_fit_at_zero(x, out.per_spin);
  const std::vector<double> x_tail(x.begin() + 1, x.end());
  const std::vector<double> y_tail(out.per_spin.begin() + 1, out.per_spin.end());
  out.uncertainty = std::abs(quadratic_fit_at_zero(x_tail, y_tail) - out.energy);
  return out;
}

ExactReference reference_energy(const ModelPreset& preset, std::size_t ed_max_L) {
  ExactReference ref = exact_exponents(preset);
  if (preset.kind == PresetKind::kIsingCritical) {
    ref.energy_per_spin = free_fermion_energy(preset.params);
    ref.uncertainty = 1e-10;
    ref.provenance = "free-fermion dispersion integral (adaptive Gauss-Kronrod)";
  } else {
    const auto fit = ed_extrapolate(preset.params, ed_max_L);
    ref.energy_per_spin = fit.energy;
    ref.uncertainty = fit.uncertainty;
    ref.provenance = "Lanczos ED, periodic L=8.." + std::to_string(ed_max_L) +
                     ", quadratic extrapolation in 1/L^2";
  }
  return ref;
}

nlohmann::json to_json(const ExactReference& ref) {
  nlohmann::json j;
  j["model"] = ref.model;
  j["exponents"] = nlohmann::json::array();
  for (const auto& e : ref.exponents) j["exponents"].push_back({{"label", std::string(1, e.label)}, {"nu", e.nu}});
  if (ref.energy_per_spin) {
    j["energy"] = *ref.energy_per_spin;
  } else {
    j["energy"] = nullptr;
  }
  j["uncertainty"] = ref.uncertainty;
  j["provenance"] = ref.provenance;
  return j;
}

}  // namespace qumera::models
