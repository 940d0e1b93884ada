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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "qumera/commands.hpp"
#include "qumera/error.hpp"
#include "qumera/flat_config.hpp"

namespace {

using namespace qumera;
using namespace qumera::cli;

const std::map<std::string, opt::LagrangeMode> kLagrangeModes = {{"exact", opt::LagrangeMode::kExactResolve},
                                                                  {"penalty", opt::LagrangeMode::kPenalty}};
const std::map<std::string, opt::GradientMode> kGradientModes = {{"linearized", opt::GradientMode::kLinearized},
                                                                 {"scale-summed", opt::GradientMode::kScaleSummed}};
const std::map<std::string, channel::SpectrumMethod> kMethods = {{"auto", channel::SpectrumMethod::kAuto},
                                                                 {"dense", channel::SpectrumMethod::kDense},
                                                                 {"arnoldi", channel::SpectrumMethod::kArnoldi}};

void add_optimizer_options(CLI::App* cmd, OptimizeArgs& a) {
  cmd->add_option("--model", a.model, "ising or xxz:<delta>")->capture_default_str();
  cmd->add_option("--m", a.m, "bond dimension (2 or 4)")->capture_default_str();
  cmd->add_option("--b", a.blocking, "spins per effective site (default log2 m)");
  cmd->add_option("--out", a.out, "output directory")->capture_default_str();
  cmd->add_option("--seed", a.config.seed, "master seed")->capture_default_str();
  cmd->add_option("--init", a.init, "start from this checkpoint instead of a random ansatz");
  cmd->add_option("--sweeps", a.config.sweeps, "maximum sweeps")->capture_default_str();
  cmd->add_option("--moves", a.config.moves_per_tensor, "proposals per tensor per sweep")->capture_default_str();
  cmd->add_option("--epsilon-start", a.config.epsilon_start)->capture_default_str();
  cmd->add_option("--epsilon-min", a.config.epsilon_min)->capture_default_str();
  cmd->add_option("--epsilon-decay", a.config.epsilon_decay)->capture_default_str();
  cmd->add_option("--fp-tol", a.config.fp_tol, "fixed-point residual tolerance")->capture_default_str();
  cmd->add_option("--fp-max-iter", a.config.fp_max_iter, "descend applications per re-solve")->capture_default_str();
  cmd->add_option("--lagrange", a.config.lagrange_mode, "exact or penalty")
      ->transform(CLI::CheckedTransformer(kLagrangeModes, CLI::ignore_case));
  cmd->add_option("--penalty", a.config.penalty, "multiplier L in penalty mode")->capture_default_str();
  cmd->add_option("--gradient", a.config.gradient_mode, "linearized or scale-summed")
      ->transform(CLI::CheckedTransformer(kGradientModes, CLI::ignore_case));
  cmd->add_flag("--tangent-projection", a.config.tangent_projection, "project gradients before the sign rule");
  cmd->add_option("--checkpoint-every", a.config.checkpoint_every, "sweeps between checkpoints (0 = end only)");
  cmd->add_option("--max-seconds", a.config.max_seconds, "wall-clock budget checked between sweeps (0 = none)");
  cmd->add_option("--ed-max-L", a.ed_max_L, "largest ED size for the XXZ reference")->capture_default_str();
  cmd->add_option("--progress-every", a.progress_every, "sweeps between progress lines (0 = none)");
}

void add_spectrum_options(CLI::App* cmd, std::size_t& k, channel::SpectrumMethod& method, double& cluster_tol,
                          double& match_tol) {
  cmd->add_option("--k", k, "number of eigenvalues")->capture_default_str();
  cmd->add_option("--method", method, "auto, dense or arnoldi")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  cmd->add_option("--cluster-tol", cluster_tol, "relative modulus gap for degeneracy groups")->capture_default_str();
  cmd->add_option("--match-tol", match_tol, "largest |nu - nu_exact| accepted as a match")->capture_default_str();
}

// Values from --config fill every option the command line left unset.
void apply_config(CLI::App* cmd, const std::string& path) {
  if (path.empty()) return;
  for (const auto& [key, value] : read_flat_config(path)) {
    CLI::Option* opt = cmd->get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") throw IoError(path + ": unknown key '" + key + "'");
    if (opt->count() > 0) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous binary MERA optimizer and critical-exponent extraction"};
  app.require_subcommand(1);

  OptimizeArgs optimize_args;
  auto* optimize = app.add_subcommand("optimize", "optimize an ansatz; writes ansatz.ckpt, trace.csv, summary.json");
  add_optimizer_options(optimize, optimize_args);

  SpectrumArgs spectrum_args;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of the transfer map; writes spectrum.csv, report.json");
  spectrum->add_option("--checkpoint", spectrum_args.checkpoint, "ansatz checkpoint")->required();
  spectrum->add_option("--model", spectrum_args.model, "compare against this model's exact exponents");
  spectrum->add_option("--out", spectrum_args.out, "output directory")->capture_default_str();
  add_spectrum_options(spectrum, spectrum_args.k, spectrum_args.method, spectrum_args.cluster_tol,
                       spectrum_args.match_tol);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "optimize and analyse XXZ chains over a list of delta values");
  add_optimizer_options(sweep, sweep_args.base);
  sweep->add_option("--deltas", sweep_args.deltas, "comma separated anisotropies in [-1, 1]")->delimiter(',');
  add_spectrum_options(sweep, sweep_args.k, sweep_args.method, sweep_args.cluster_tol, sweep_args.match_tol);

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "reference energy and exponents; writes reference.json");
  oracle->add_option("--model", oracle_args.model, "ising or xxz:<delta>")->capture_default_str();
  oracle->add_option("--ed-max-L", oracle_args.ed_max_L, "largest ED size")->capture_default_str();
  oracle->add_option("--out", oracle_args.out, "output directory")->capture_default_str();

  GradcheckArgs grad_args;
  auto* gradcheck = app.add_subcommand("gradcheck", "finite-difference check of the linearized gradient");
  gradcheck->add_option("--model", grad_args.model, "model for h")->capture_default_str();
  gradcheck->add_option("--m", grad_args.m, "bond dimension (2 or 4)")->capture_default_str();
  gradcheck->add_flag("--zero-h", grad_args.zero_h, "use h = 0");
  gradcheck->add_option("--directions", grad_args.directions)->capture_default_str();
  gradcheck->add_option("--step", grad_args.step, "central difference step")->capture_default_str();
  gradcheck->add_option("--tol", grad_args.tol, "largest accepted relative error")->capture_default_str();
  gradcheck->add_option("--seed", grad_args.seed)->capture_default_str();
  gradcheck->add_option("--out", grad_args.out, "output directory")->capture_default_str();
  gradcheck->add_flag("--corrupt-gradient", grad_args.corrupt)->group("");  // negative-control hook

  std::map<CLI::App*, std::string> config_paths;
  for (auto* cmd : {optimize, spectrum, sweep, oracle, gradcheck}) {
    cmd->add_option("--config", config_paths[cmd], "flat key = value file; flags take precedence");
  }

  try {
    app.parse(argc, argv);
    for (auto* cmd : {optimize, spectrum, sweep, oracle, gradcheck}) {
      if (cmd->parsed()) apply_config(cmd, config_paths[cmd]);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qumera: " << e.what() << "\n";
    return kExitUsage;
  }

  if (optimize->parsed()) return cmd_optimize(optimize_args, std::cerr);
  if (spectrum->parsed()) return cmd_spectrum(spectrum_args, std::cerr);
  if (sweep->parsed()) return cmd_sweep(sweep_args, std::cerr);
  if (oracle->parsed()) return cmd_oracle(oracle_args, std::cout);
  return cmd_gradcheck(grad_args, std::cerr);
}
