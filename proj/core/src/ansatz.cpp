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

#include "qumera/channel/ansatz.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qumera/error.hpp"
#include "qumera/tensnet/isometry.hpp"
#include "qumera/tensnet/serialize.hpp"

namespace qumera::channel {

namespace {

void require_three_site(const Tensor& t, const char* what) {
  const auto& s = t.shape();
  if (s.size() != 6 || s[0] != s[1] || s[1] != s[2] || s[2] != s[3] || s[3] != s[4] ||
      s[4] != s[5]) {
    throw InvariantError(std::string(what) + ": expected an m x m x m x m x m x m tensor");
  }
}

}  // namespace

MeraAnsatz MeraAnsatz::random(std::size_t m, int blocking, tensnet::Rng& rng) {
  MeraAnsatz a;
  a.m = m;
  a.blocking = blocking;
  a.chi = tensnet::random_isometry(m * m, m * m, rng).reshaped({m, m, m, m});
  a.lambda = tensnet::random_isometry(m * m, m, rng).reshaped({m, m, m});
  return a;
}

double MeraAnsatz::chi_defect() const {
  const auto u = chi.matrix(2);
  const auto n = u.rows();
  const double left = (u.adjoint() * u - RowMatrix::Identity(n, n)).norm();
  const double right = (u * u.adjoint() - RowMatrix::Identity(n, n)).norm();
  return std::max(left, right);
}

double MeraAnsatz::lambda_defect() const { return tensnet::isometry_defect(lambda, 2); }

void MeraAnsatz::validate(double tol) const {
  if (m == 0) throw InvariantError("ansatz: bond dimension must be positive");
  if (chi.shape() != tensnet::Shape{m, m, m, m}) throw InvariantError("ansatz: chi must be m x m x m x m");
  if (lambda.shape() != tensnet::Shape{m, m, m}) throw InvariantError("ansatz: lambda must be m x m x m");
  if (!chi.all_finite() || !lambda.all_finite()) throw InvariantError("ansatz: non-finite entries");
  if (const double d = chi_defect(); !(d <= tol)) {
    throw InvariantError("ansatz: chi is not unitary (defect " + std::to_string(d) + ")");
  }
  if (const double d = lambda_defect(); !(d <= tol)) {
    throw InvariantError("ansatz: lambda is not an isometry (defect " + std::to_string(d) + ")");
  }
}

DensityMatrix3 DensityMatrix3::from_matrix(const RowMatrix& matrix, std::size_t m) {
  const auto n = static_cast<Eigen::Index>(m * m * m);
  if (matrix.rows() != n || matrix.cols() != n) throw InvariantError("density: expected m^3 x m^3 matrix");
  DensityMatrix3 d{Tensor({m, m, m, m, m, m})};
  d.rho.matrix(3) = matrix;
  return d;
}

DensityMatrix3 DensityMatrix3::maximally_mixed(std::size_t m) {
  const auto n = static_cast<Eigen::Index>(m * m * m);
  return from_matrix(RowMatrix::Identity(n, n) / static_cast<double>(n), m);
}

DensityMatrix3 DensityMatrix3::random(std::size_t m, tensnet::Rng& rng) {
  const auto n = static_cast<Eigen::Index>(m * m * m);
  RowMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  }
  RowMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  return from_matrix(rho, m);
}

double DensityMatrix3::hermiticity_defect() const {
  const auto r = matrix();
  return (r - r.adjoint()).norm();
}

Complex DensityMatrix3::trace() const { return matrix().trace(); }

double DensityMatrix3::min_eigenvalue() const {
  const RowMatrix r = matrix();
  const RowMatrix h = 0.5 * (r + r.adjoint());
  Eigen::SelfAdjointEigenSolver<RowMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

void DensityMatrix3::validate() const {
  require_three_site(rho, "density");
  if (!rho.all_finite()) throw InvariantError("density: non-finite entries");
  if (const double d = hermiticity_defect(); d > 1e-10) {
    throw InvariantError("density: not Hermitian (defect " + std::to_string(d) + ")");
  }
  if (const double d = std::abs(trace() - 1.0); d > 1e-10) {
    throw InvariantError("density: trace differs from 1 by " + std::to_string(d));
  }
  if (const double e = min_eigenvalue(); e < -1e-9) {
    throw InvariantError("density: negative eigenvalue " + std::to_string(e));
  }
}

Operator3 Operator3::from_matrix(const RowMatrix& matrix, std::size_t m, bool hermitian) {
  const auto n = static_cast<Eigen::Index>(m * m * m);
  if (matrix.rows() != n || matrix.cols() != n) throw InvariantError("operator: expected m^3 x m^3 matrix");
  Operator3 o{Tensor({m, m, m, m, m, m}), hermitian};
  o.op.matrix(3) = matrix;
  return o;
}

Operator3 Operator3::identity(std::size_t m) {
  return Operator3{Tensor::identity({m, m, m}), true};
}

Operator3 Operator3::zero(std::size_t m) {
  return Operator3{Tensor({m, m, m, m, m, m}), true};
}

void Operator3::validate() const {
  require_three_site(op, "operator");
  if (!op.all_finite()) throw InvariantError("operator: non-finite entries");
  if (hermitian) {
    const auto h = matrix();
    if (const double d = (h - h.adjoint()).norm(); d > 1e-10) {
      throw InvariantError("operator: flagged Hermitian but defect is " + std::to_string(d));
    }
  }
}

DensityMatrix3 normalize_density(const Tensor& rho) {
  const auto r = rho.matrix(3);
  RowMatrix h = 0.5 * (r + r.adjoint());
  const Complex tr = h.trace();
  if (std::abs(tr) < 1e-300) throw InvariantError("normalize_density: zero trace");
  h /= tr.real();
  return DensityMatrix3::from_matrix(h, rho.dim(0));
}

void save_checkpoint(const std::string& path, const MeraAnsatz& ansatz, const CheckpointInfo& info) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << "qumera-ansatz m=" << ansatz.m << " b=" << ansatz.blocking << " seed=" << info.seed
      << " iteration=" << info.iteration << '\n';
  tensnet::write_tensor(out, ansatz.chi);
  tensnet::write_tensor(out, ansatz.lambda);
  if (!out) throw IoError("failed writing checkpoint " + path);
}

MeraAnsatz load_checkpoint(const std::string& path, CheckpointInfo* info) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open checkpoint " + path);
  std::string header;
  if (!std::getline(in, header)) throw IoError("checkpoint " + path + " is empty");
  std::istringstream hs(header);
  std::string tag;
  hs >> tag;
  if (tag != "qumera-ansatz") throw IoError("checkpoint " + path + " has no qumera-ansatz header");
  MeraAnsatz a;
  CheckpointInfo ci;
  bool have_m = false, have_b = false;
  for (std::string field; hs >> field;) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw IoError("checkpoint header field without '=': " + field);
    const auto key = field.substr(0, eq);
    const auto value = field.substr(eq + 1);
    try {
      if (key == "m") {
        a.m = std::stoul(value);
        have_m = true;
      } else if (key == "b") {
        a.blocking = std::stoi(value);
        have_b = true;
      } else if (key == "seed") {
        ci.seed = std::stoull(value);
      } else if (key == "iteration") {
        ci.iteration = std::stoull(value);
      }
    } catch (const std::exception&) {
      throw IoError("checkpoint header has a malformed value: " + field);
    }
  }
  if (!have_m || !have_b) throw IoError("checkpoint header is missing m or b");
  a.chi = tensnet::read_tensor(in);
  a.lambda = tensnet::read_tensor(in);
  try {
    a.validate();
  } catch (const InvariantError& e) {
    throw IoError("checkpoint " + path + " is corrupt: " + e.what());
  }
  if (info) *info = ci;
  return a;
}

}  // namespace qumera::channel
