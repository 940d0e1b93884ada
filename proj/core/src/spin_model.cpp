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

#include "qumera/models/spin_model.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "qumera/error.hpp"

namespace qumera::models {

using channel::Complex;

namespace {

using Mat2 = Eigen::Matrix2cd;

Mat2 pauli(char alpha) {
  Mat2 p;
  switch (alpha) {
    case 'x': p << 0, 1, 1, 0; break;
    case 'y': p << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'z': p << 1, 0, 0, -1; break;
    default: p = Mat2::Identity();
  }
  return p;
}

// Operator on `spins` spins with the given single-spin factors at positions
// i and j (j may equal i for a one-spin term, pass 'i' as beta to skip it).
RowMatrix embed(std::size_t spins, std::size_t i, char alpha, std::size_t j, char beta) {
  RowMatrix out = RowMatrix::Identity(1, 1);
  for (std::size_t s = 0; s < spins; ++s) {
    Mat2 f = Mat2::Identity();
    if (s == i) f = pauli(alpha);
    if (s == j && beta != 'i') f = pauli(beta);
    RowMatrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block<2, 2>(2 * r, 2 * c) = out(r, c) * f;
      }
    }
    out = std::move(next);
  }
  return out;
}

RowMatrix bond(const SpinModelParams& p, std::size_t spins, std::size_t i, std::size_t j) {
  return -0.5 * p.J *
         ((1.0 + p.gamma) * embed(spins, i, 'x', j, 'x') +
          (1.0 - p.gamma) * embed(spins, i, 'y', j, 'y') + p.delta * embed(spins, i, 'z', j, 'z'));
}

RowMatrix field(const SpinModelParams& p, std::size_t spins, std::size_t i) {
  return -p.J * p.b_field * embed(spins, i, 'z', i, 'i');
}

}  // namespace

void SpinModelParams::validate() const {
  if (!std::isfinite(J) || !std::isfinite(gamma) || !std::isfinite(delta) || !std::isfinite(b_field)) {
    throw InvariantError("model parameters must be finite");
  }
  if (J == 0.0) throw InvariantError("model coupling J must be non-zero");
}

ModelPreset ModelPreset::ising_critical() {
  ModelPreset p;
  p.kind = PresetKind::kIsingCritical;
  p.params = {1.0, 1.0, 0.0, 1.0};
  return p;
}

ModelPreset ModelPreset::xxz(double delta) {
  ModelPreset p;
  p.kind = PresetKind::kXxz;
  p.params = {-1.0, 0.0, delta, 0.0};
  p.validate();
  return p;
}

ModelPreset ModelPreset::parse(std::string_view name) {
  if (name == "ising") return ising_critical();
  if (name.starts_with("xxz:")) {
    const auto text = std::string(name.substr(4));
    std::size_t used = 0;
    double delta = 0.0;
    try {
      delta = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw InvariantError("model preset '" + std::string(name) + "': cannot parse delta");
    }
    return xxz(delta);
  }
  throw InvariantError("unknown model preset '" + std::string(name) + "' (expected ising or xxz:<delta>)");
}

std::string ModelPreset::name() const {
  if (kind == PresetKind::kIsingCritical) return "ising";
  std::ostringstream os;
  os << "xxz:" << params.delta;
  return os.str();
}

void ModelPreset::validate() const {
  params.validate();
  if (kind == PresetKind::kIsingCritical) {
    if (params.gamma != 1.0 || params.delta != 0.0 || std::abs(params.b_field) != 1.0) {
      throw InvariantError("ising preset requires gamma=1, delta=0, |b|=1");
    }
  } else {
    if (params.gamma != 0.0 || params.b_field != 0.0 || !(std::abs(params.delta) <= 1.0)) {
      throw InvariantError("xxz preset requires gamma=0, b=0, |delta|<=1 (got delta=" +
                           std::to_string(params.delta) + ")");
    }
  }
}

Operator3 build_local_h(const SpinModelParams& params, int blocking) {
  params.validate();
  if (blocking != 1 && blocking != 2) {
    throw InvariantError("build_local_h: unsupported blocking " + std::to_string(blocking) +
                         " (supported: 1, 2)");
  }
  const auto b = static_cast<std::size_t>(blocking);
  const std::size_t spins = 3 * b;
  const std::size_t first = b, last = 2 * b - 1;  // central block
  const auto n = static_cast<Eigen::Index>(std::size_t{1} << spins);
  RowMatrix h = RowMatrix::Zero(n, n);
  for (std::size_t s = first; s < last; ++s) h += bond(params, spins, s, s + 1);
  h += 0.5 * bond(params, spins, first - 1, first);
  h += 0.5 * bond(params, spins, last, last + 1);
  for (std::size_t s = first; s <= last; ++s) h += field(params, spins, s);
  return Operator3::from_matrix(h, std::size_t{1} << b, true);
}

RowMatrix dense_hamiltonian(const SpinModelParams& params, std::size_t spins) {
  params.validate();
  if (spins < 2 || spins > 12) throw InvariantError("dense_hamiltonian: need 2 <= spins <= 12");
  const auto n = static_cast<Eigen::Index>(std::size_t{1} << spins);
  RowMatrix h = RowMatrix::Zero(n, n);
  for (std::size_t j = 0; j < spins; ++j) {
    h += bond(params, spins, j, (j + 1) % spins);
    h += field(params, spins, j);
  }
  return h;
}

}  // namespace qumera::models
