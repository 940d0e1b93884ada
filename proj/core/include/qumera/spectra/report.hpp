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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qumera/models/exact.hpp"

namespace qumera::spectra {

using Complex = std::complex<double>;

inline constexpr double kLeadingTolerance = 1e-6;
inline constexpr double kDefaultClusterTolerance = 1e-3;

struct RankedExponent {
  std::size_t rank = 0;  // 1-based position in the eigenvalue list
  double nu = 0.0;       // -2 log2 |kappa|; +inf for a zero eigenvalue
};

// Consecutive ranks whose moduli differ by less than the cluster tolerance
// (relative to the larger one).
struct DegeneracyGroup {
  std::size_t first_rank = 0;
  std::size_t last_rank = 0;
  double modulus = 0.0;  // mean over the group

  std::size_t size() const { return last_rank - first_rank + 1; }
};

struct LabelMatch {
  char label = 'x';
  double nu_exact = 0.0;
  std::optional<std::size_t> rank;  // empty when nothing fell within tolerance
  double nu_computed = 0.0;
  double abs_err = 0.0;
};

struct Comparison {
  std::vector<LabelMatch> matches;      // in increasing nu_exact order
  std::vector<RankedExponent> spurious; // skipped over between matched ranks
  // |nu_x nu_z - 1| when both labels matched; exact for the XXZ family.
  std::optional<double> nu_product_defect;
};

struct SpectrumReport {
  std::vector<Complex> eigenvalues;     // decreasing modulus
  std::vector<RankedExponent> exponents;  // ranks >= 2
  std::vector<DegeneracyGroup> groups;    // ranks >= 2
  double cluster_tolerance = kDefaultClusterTolerance;
  std::optional<Comparison> comparison;
};

// nu_r = -2 log2 |kappa_r| for r >= 2. Throws InvariantError if the leading
// modulus is further than 1e-6 from 1 or the list is not sorted by modulus.
SpectrumReport exponents_from_spectrum(const std::vector<Complex>& eigenvalues,
                                       double cluster_tolerance = kDefaultClusterTolerance);

// Walks the exact exponents in increasing nu; each takes the first unused
// computed exponent (in rank order) within its tolerance, and computed
// exponents passed over on the way are listed as spurious. Labels missing
// from `tol_per_label` use `default_tol`.
Comparison match_report(const SpectrumReport& report, const models::ExactReference& exact,
                        const std::map<char, double>& tol_per_label = {}, double default_tol = 0.25);

// {model, m, eigenvalues, exponents, groups, matches, spurious, nu_product_defect}
nlohmann::json to_json(const SpectrumReport& report, const std::string& model, std::size_t m);

}  // namespace qumera::spectra
