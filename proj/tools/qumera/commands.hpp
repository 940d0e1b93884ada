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

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qumera/channel/spectrum.hpp"
#include "qumera/opt/optimizer.hpp"

namespace qumera::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad arguments or I/O failure
  kExitAbort = 2,       // optimizer abort
  kExitValidation = 3,  // a check did not pass
};

struct OptimizeArgs {
  std::string model = "ising";
  std::size_t m = 4;
  int blocking = 0;  // 0: log2(m)
  opt::OptimizerConfig config;
  std::filesystem::path out = "qumera-out";
  std::string init;  // checkpoint to start from
  std::size_t ed_max_L = 16;
  int progress_every = 10;  // sweeps between progress lines, 0 = silent
};

struct SpectrumArgs {
  std::string checkpoint;
  std::string model;  // empty: no comparison against exact exponents
  std::size_t k = 16;
  channel::SpectrumMethod method = channel::SpectrumMethod::kAuto;
  double cluster_tol = 1e-3;
  double match_tol = 0.25;
  std::filesystem::path out = "qumera-out";
};

struct SweepArgs {
  OptimizeArgs base;
  std::vector<double> deltas;
  std::size_t k = 16;
  channel::SpectrumMethod method = channel::SpectrumMethod::kAuto;
  double cluster_tol = 1e-3;
  double match_tol = 0.25;
};

struct OracleArgs {
  std::string model = "ising";
  std::size_t ed_max_L = 16;
  std::filesystem::path out = "qumera-out";
};

struct GradcheckArgs {
  std::string model = "ising";
  std::size_t m = 2;
  bool zero_h = false;
  std::size_t directions = 20;
  double step = 1e-5;
  double tol = 1e-6;
  std::uint64_t seed = 1;
  std::filesystem::path out = "qumera-out";
  bool corrupt = false;  // test hook: perturb the analytic gradient
};

int cmd_optimize(const OptimizeArgs& args, std::ostream& log);
int cmd_spectrum(const SpectrumArgs& args, std::ostream& log);
int cmd_sweep(const SweepArgs& args, std::ostream& log);
int cmd_oracle(const OracleArgs& args, std::ostream& log);
int cmd_gradcheck(const GradcheckArgs& args, std::ostream& log);

// Sweep worker count: QUMERA_THREADS if set (>= 1), else the hardware
// concurrency, never more than `points`.
unsigned sweep_threads(std::size_t points);

}  // namespace qumera::cli
