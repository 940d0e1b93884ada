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

#include "qumera/spectra/report.hpp"

#include <cmath>
#include <limits>

#include "qumera/error.hpp"

namespace qumera::spectra {

namespace {

nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }

}  // namespace

SpectrumReport exponents_from_spectrum(const std::vector<Complex>& eigenvalues, double cluster_tolerance) {
  if (eigenvalues.empty()) throw InvariantError("exponents_from_spectrum: empty spectrum");
  if (!(cluster_tolerance >= 0.0)) throw InvariantError("exponents_from_spectrum: negative cluster tolerance");
  const double lead = std::abs(eigenvalues.front());
  if (std::abs(lead - 1.0) > kLeadingTolerance) {
    throw InvariantError("exponents_from_spectrum: leading modulus " + std::to_string(lead) +
                         " is not 1; the map is not trace preserving");
  }
  for (std::size_t i = 1; i < eigenvalues.size(); ++i) {
    if (std::abs(eigenvalues[i]) > std::abs(eigenvalues[i - 1]) * (1.0 + 1e-12)) {
      throw InvariantError("exponents_from_spectrum: eigenvalues are not sorted by modulus");
    }
  }
  SpectrumReport r;
  r.eigenvalues = eigenvalues;
  r.cluster_tolerance = cluster_tolerance;
  for (std::size_t i = 1; i < eigenvalues.size(); ++i) {
    const double mod = std::abs(eigenvalues[i]);
    const double nu = mod > 0.0 ? -2.0 * std::log2(mod) : std::numeric_limits<double>::infinity();
    r.exponents.push_back({i + 1, nu});

    const bool joins = !r.groups.empty() && [&] {
      const double prev = std::abs(eigenvalues[i - 1]);
      return prev > 0.0 && (prev - mod) / prev < cluster_tolerance;
    }();
    if (joins) {
      auto& g = r.groups.back();
      g.modulus = (g.modulus * static_cast<double>(g.size()) + mod) / static_cast<double>(g.size() + 1);
      g.last_rank = i + 1;
    } else {
      r.groups.push_back({i + 1, i + 1, mod});
    }
  }
  return r;
}

Comparison match_report(const SpectrumReport& report, const models::ExactReference& exact,
                        const std::map<char, double>& tol_per_label, double default_tol) {
  Comparison c;
  auto labels = exact.exponents;
  std::stable_sort(labels.begin(), labels.end(),
                   [](const models::ExactExponent& a, const models::ExactExponent& b) { return a.nu < b.nu; });
  std::vector<bool> used(report.exponents.size(), false);
  std::size_t cursor = 0;  // computed exponents before this index are matched or spurious
  for (const auto& ex : labels) {
    const auto it = tol_per_label.find(ex.label);
    const double tol = it != tol_per_label.end() ? it->second : default_tol;
    LabelMatch match{ex.label, ex.nu, std::nullopt, 0.0, 0.0};
    for (std::size_t i = cursor; i < report.exponents.size(); ++i) {
      if (used[i]) continue;
      const double err = std::abs(report.exponents[i].nu - ex.nu);
      if (err <= tol) {
        for (std::size_t j = cursor; j < i; ++j) {
          if (!used[j]) {
            used[j] = true;
            c.spurious.push_back(report.exponents[j]);
          }
        }
        used[i] = true;
        cursor = i + 1;
        match.rank = report.exponents[i].rank;
        match.nu_computed = report.exponents[i].nu;
        match.abs_err = err;
        break;
      }
    }
    c.matches.push_back(match);
  }
  const auto find = [&](char label) -> const LabelMatch* {
    for (const auto& mt : c.matches) {
      if (mt.label == label && mt.rank) return &mt;
    }
    return nullptr;
  };
  if (const auto *x = find('x'), *z = find('z'); x && z) {
    c.nu_product_defect = std::abs(x->nu_computed * z->nu_computed - 1.0);
  }
  return c;
}

nlohmann::json to_json(const SpectrumReport& report, const std::string& model, std::size_t m) {
  using nlohmann::json;
  json j;
  j["model"] = model;
  j["m"] = m;
  j["eigenvalues"] = json::array();
  for (const auto& k : report.eigenvalues) {
    j["eigenvalues"].push_back({{"re", k.real()}, {"im", k.imag()}, {"modulus", std::abs(k)}});
  }
  j["exponents"] = json::array();
  for (const auto& e : report.exponents) j["exponents"].push_back({{"rank", e.rank}, {"nu", finite_or_null(e.nu)}});
  j["cluster_tolerance"] = report.cluster_tolerance;
  j["groups"] = json::array();
  for (const auto& g : report.groups) {
    j["groups"].push_back({{"first_rank", g.first_rank}, {"last_rank", g.last_rank}, {"modulus", g.modulus}});
  }
  j["matches"] = json::array();
  j["spurious"] = json::array();
  j["nu_product_defect"] = nullptr;
  if (report.comparison) {
    for (const auto& mt : report.comparison->matches) {
      json row = {{"label", std::string(1, mt.label)}, {"nu_exact", mt.nu_exact}};
      if (mt.rank) {
        row["rank"] = *mt.rank;
        row["nu_computed"] = mt.nu_computed;
        row["abs_err"] = mt.abs_err;
      } else {
        row["rank"] = nullptr;
        row["nu_computed"] = nullptr;
        row["abs_err"] = nullptr;
      }
      j["matches"].push_back(row);
    }
    for (const auto& s : report.comparison->spurious) {
      j["spurious"].push_back({{"rank", s.rank}, {"nu", finite_or_null(s.nu)}});
    }
    if (report.comparison->nu_product_defect) j["nu_product_defect"] = *report.comparison->nu_product_defect;
  }
  return j;
}

}  // namespace qumera::spectra
