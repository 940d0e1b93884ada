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
#include <cstdint>
#include <random>

namespace qumera::tensnet {

// Reproducible random source. Raw bits come from std::mt19937_64, whose
// output sequence is fixed by the C++ standard; the floating-point transforms
// below are written out here (rather than using <random> distributions, which
// are implementation-defined) so every platform draws identical values.
//
//   uniform()  = (next() >> 11) * 2^-53                      in [0, 1)
//   normal()   = Box-Muller on two uniforms, cosine branch only
//   complex_normal() = (normal() + i normal()) / sqrt(2)     E|z|^2 = 1
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  std::complex<double> complex_normal();

  // Seed for an independent stream, e.g. one per sweep point.
  static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

 private:
  std::mt19937_64 engine_;
};

}  // namespace qumera::tensnet
