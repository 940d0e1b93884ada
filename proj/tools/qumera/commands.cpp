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

#include "qumera/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "qumera/channel/superoperator.hpp"
#include "qumera/error.hpp"
#include "qumera/models/exact.hpp"
#include "qumera/models/spin_model.hpp"
#include "qumera/opt/gradcheck.hpp"
#include "qumera/output.hpp"
#include "qumera/spectra/report.hpp"

namespace qumera::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int resolve_blocking(std::size_t m, int blocking) {
  int b = blocking;
  if (b == 0) {
    if (m == 2) b = 1;
    if (m == 4) b = 2;
  }
  if ((b != 1 && b != 2) || (std::size_t{1} << b) != m) {
    throw InvariantError("m=" + std::to_string(m) + " with blocking " + std::to_string(blocking) +
                         ": the spin models need m = 2^b with b in {1, 2}");
  }
  return b;
}


const char* lagrange_name(opt::LagrangeMode m) {
  return m == opt::LagrangeMode::kPenalty ? "penalty" : "exact";
}

json config_json(const opt::OptimizerConfig& c) {
  return {{"epsilon_start", c.epsilon_start},
          {"epsilon_min", c.epsilon_min},
          {"epsilon_decay", c.epsilon_decay},
          {"sweeps", c.sweeps},
          {"moves_per_tensor", c.moves_per_tensor},
          {"fp_tol", c.fp_tol},
          {"fp_max_iter", c.fp_max_iter},
          {"seed", c.seed},
          {"lagrange_mode", lagrange_name(c.lagrange_mode)},
          {"penalty", c.penalty},
          {"gradient", c.gradient_mode == opt::GradientMode::kScaleSummed ? "scale-summed" : "linearized"},
          {"tangent_projection", c.tangent_projection},
          {"max_seconds", c.max_seconds}};
}

std::string trace_csv(const std::vector<opt::TraceEntry>& trace) {
  std::ostringstream os;
  os << "sweep,epsilon,energy,residual,accepted_target\n";
  for (const auto& t : trace) {
    os << t.sweep << ',' << sci(t.epsilon) << ',' << sci(t.energy) << ',' << sci(t.residual) << ','
       << t.accepted << '\n';
  }
  return os.str();
}

struct OptimizeOutcome {
  opt::OptimizerState state;
  models::ExactReference reference;
  double delta_e = 0.0;
};

// Runs the optimizer and writes trace.csv, ansatz.ckpt and summary.json into
// `dir`. Optimizer aborts propagate as OptimizerAbortError.
OptimizeOutcome run_optimize(const OptimizeArgs& args, const fs::path& dir, std::ostream& log,
                             const std::string& prefix) {
  const auto preset = models::ModelPreset::parse(args.model);
  const int b = resolve_blocking(args.m, args.blocking);
  args.config.validate();
  const auto h = models::build_local_h(preset.params, b);
  OptimizeOutcome out;
  out.reference = models::reference_energy(preset, args.ed_max_L);
  const double e_ref = *out.reference.energy_per_spin;

  std::optional<channel::MeraAnsatz> init;
  if (!args.init.empty()) {
    init = channel::load_checkpoint(args.init);
    if (init->m != args.m) throw InvariantError("--init checkpoint has m=" + std::to_string(init->m));
    init->blocking = b;
  }
  const fs::path ckpt = dir / "ansatz.ckpt";
  const auto observer = [&](const opt::OptimizerState& s, bool checkpoint_due) {
    if (checkpoint_due) {
      channel::save_checkpoint(ckpt.string(), s.ansatz, {args.config.seed, static_cast<std::uint64_t>(s.sweeps_run)});
    }
    if (args.progress_every > 0 && s.sweeps_run % args.progress_every == 0) {
      log << prefix << "sweep " << s.sweeps_run << "  eps " << s.epsilon << "  E " << sci(s.energy)
          << "  dE " << s.energy - e_ref << "  " << s.trace.back().accepted << std::endl;
    }
  };
  out.state = opt::optimize(h, args.config, init, observer);
  out.delta_e = out.state.energy - e_ref;

  write_text(dir / "trace.csv", trace_csv(out.state.trace));
  channel::save_checkpoint(ckpt.string(), out.state.ansatz,
                           {args.config.seed, static_cast<std::uint64_t>(out.state.sweeps_run)});
  std::size_t accepted = 0;
  for (const auto& t : out.state.trace) accepted += t.accepted != "none" && t.sweep > 0;
  json summary = {{"model", preset.name()},
                  {"m", args.m},
                  {"blocking", b},
                  {"seed", args.config.seed},
                  {"sweeps_run", out.state.sweeps_run},
                  {"stop_reason", out.state.stop_reason},
                  {"accepted_sweeps", accepted},
                  {"failed_proposals", out.state.failed_proposals},
                  {"epsilon_final", out.state.epsilon},
                  {"energy", out.state.energy},
                  {"reference_energy", e_ref},
                  {"reference_uncertainty", out.reference.uncertainty},
                  {"reference_provenance", out.reference.provenance},
                  {"delta_e", out.delta_e},
                  {"residual", out.state.residual},
                  {"config", config_json(args.config)}};
  write_json(dir / "summary.json", summary);
  return out;
}

struct SpectrumOutcome {
  spectra::SpectrumReport report;
};

SpectrumOutcome run_spectrum(const channel::MeraAnsatz& ansatz, const std::string& model, std::size_t k,
                             channel::SpectrumMethod method, double cluster_tol, double match_tol,
                             const fs::path& dir) {
  channel::SpectrumOptions so;
  so.method = method;
  const auto eigs = channel::spectrum(ansatz, k, so);
  SpectrumOutcome out;
  out.report = spectra::exponents_from_spectrum(eigs, cluster_tol);
  if (!model.empty()) {
    const auto exact = models::exact_exponents(models::ModelPreset::parse(model));
    out.report.comparison = spectra::match_report(out.report, exact, {}, match_tol);
  }
  std::ostringstream csv;
  csv << "rank,re,im,modulus\n";
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    csv << i + 1 << ',' << sci(eigs[i].real()) << ',' << sci(eigs[i].imag()) << ',' << sci(std::abs(eigs[i]))
        << '\n';
  }
  write_text(dir / "spectrum.csv", csv.str());
  write_json(dir / "report.json", spectra::to_json(out.report, model, ansatz.m));
  return out;
}

std::string csv_field(const std::optional<double>& v) { return v ? sci(*v) : std::string(); }

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string delta_tag(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "delta_%+.4f", d);
  return buf;
}

}  // namespace

unsigned sweep_threads(std::size_t points) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("QUMERA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = static_cast<unsigned>(v);
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(points, 1)));
}

int cmd_optimize(const OptimizeArgs& args, std::ostream& log) {
  try {
    const auto out = run_optimize(args, args.out, log, "");
    log << "energy " << sci(out.state.energy) << "  reference " << sci(*out.reference.energy_per_spin)
        << "  dE " << out.delta_e << "  sweeps " << out.state.sweeps_run << "\n";
    return kExitOk;
  } catch (const OptimizerAbortError& e) {
    log << "optimize: " << e.what() << "\n";
    return kExitAbort;
  } catch (const ConvergenceError& e) {
    log << "optimize: " << e.what() << "\n";
    return kExitAbort;
  } catch (const Error& e) {
    log << "optimize: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_spectrum(const SpectrumArgs& args, std::ostream& log) {
  try {
    const auto ansatz = channel::load_checkpoint(args.checkpoint);
    if (args.k == 0 || args.k > ansatz.m * ansatz.m * ansatz.m * ansatz.m * ansatz.m * ansatz.m) {
      throw InvariantError("--k must lie in [1, m^6]");
    }
    const auto out = run_spectrum(ansatz, args.model, args.k, args.method, args.cluster_tol, args.match_tol, args.out);
    const auto& eigs = out.report.eigenvalues;
    for (std::size_t i = 0; i < std::min<std::size_t>(eigs.size(), 6); ++i) {
      log << "rank " << i + 1 << "  |kappa| " << sci(std::abs(eigs[i]));
      if (i > 0) log << "  nu " << out.report.exponents[i - 1].nu;
      log << "\n";
    }
    if (out.report.comparison) {
      for (const auto& mt : out.report.comparison->matches) {
        log << "nu_" << mt.label << " exact " << mt.nu_exact;
        if (mt.rank) {
          log << "  rank " << *mt.rank << "  computed " << mt.nu_computed << "  err " << mt.abs_err << "\n";
        } else {
          log << "  unmatched\n";
        }
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    log << "spectrum: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_sweep(const SweepArgs& args, std::ostream& log) {
  if (args.deltas.empty()) {
    log << "sweep: no delta values given (use --deltas 0.2,0.5,0.8)\n";
    return kExitUsage;
  }
  for (const double d : args.deltas) {
    if (!(d >= -1.0 && d <= 1.0)) {
      log << "sweep: delta " << d << " outside [-1, 1]\n";
      return kExitUsage;
    }
  }
  struct Row {
    double delta = 0.0;
    bool ok = false;
    std::string status;
    double energy = 0.0, reference = 0.0, delta_e = 0.0;
    std::optional<double> nu_x, nu_y, nu_z;
    std::optional<std::size_t> nu_z_rank;
    std::size_t spurious = 0;
  };
  std::vector<Row> rows(args.deltas.size());
  std::mutex log_mutex;
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      Row& row = rows[i];
      row.delta = args.deltas[i];
      std::ostringstream model;
      model.precision(17);
      model << "xxz:" << row.delta;
      const fs::path dir = args.base.out / delta_tag(row.delta);
      try {
        OptimizeArgs point = args.base;
        point.model = model.str();
        point.config.seed = tensnet::Rng::derive_seed(args.base.config.seed, i);
        std::ostringstream buffer;
        const auto opt_out = run_optimize(point, dir, buffer, delta_tag(row.delta) + ": ");
        const auto spec =
            run_spectrum(opt_out.state.ansatz, point.model, args.k, args.method, args.cluster_tol, args.match_tol, dir);
        row.energy = opt_out.state.energy;
        row.reference = *opt_out.reference.energy_per_spin;
        row.delta_e = opt_out.delta_e;
        for (const auto& mt : spec.report.comparison->matches) {
          if (!mt.rank) continue;
          if (mt.label == 'x') row.nu_x = mt.nu_computed;
          if (mt.label == 'y') row.nu_y = mt.nu_computed;
          if (mt.label == 'z') {
            row.nu_z = mt.nu_computed;
            row.nu_z_rank = mt.rank;
          }
        }
        row.spurious = spec.report.comparison->spurious.size();
        row.ok = true;
        row.status = "ok";
        std::lock_guard lock(log_mutex);
        log << buffer.str() << delta_tag(row.delta) << ": dE " << row.delta_e << "\n";
      } catch (const std::exception& e) {
        row.status = sanitize(std::string("error: ") + e.what());
        std::lock_guard lock(log_mutex);
        log << delta_tag(row.delta) << ": " << e.what() << "\n";
      }
    }
  };
  const unsigned n = sweep_threads(rows.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows[a].delta < rows[b].delta; });
  std::ostringstream csv;
  csv << "delta,energy,reference,delta_e,nu_x,nu_y,nu_z,nu_z_rank,spurious,status\n";
  std::size_t succeeded = 0;
  for (const std::size_t i : order) {
    const Row& r = rows[i];
    csv << sci(r.delta) << ',';
    if (r.ok) {
      ++succeeded;
      csv << sci(r.energy) << ',' << sci(r.reference) << ',' << sci(r.delta_e) << ',' << csv_field(r.nu_x) << ','
          << csv_field(r.nu_y) << ',' << csv_field(r.nu_z) << ','
          << (r.nu_z_rank ? std::to_string(*r.nu_z_rank) : std::string()) << ',' << r.spurious << ',';
    } else {
      csv << ",,,,,,,,";
    }
    csv << r.status << '\n';
  }
  try {
    write_text(args.base.out / "sweep.csv", csv.str());
  } catch (const Error& e) {
    log << "sweep: " << e.what() << "\n";
    return kExitUsage;
  }
  return succeeded > 0 ? kExitOk : kExitAbort;
}

int cmd_oracle(const OracleArgs& args, std::ostream& log) {
  try {
    const auto preset = models::ModelPreset::parse(args.model);
    const auto ref = models::reference_energy(preset, args.ed_max_L);
    json j = models::to_json(ref);
    if (preset.params.delta == 0.0) j["free_fermion_energy"] = models::free_fermion_energy(preset.params);
    if (preset.kind == models::PresetKind::kXxz) {
      const auto fit = models::ed_extrapolate(preset.params, args.ed_max_L);
      j["ed"] = json::array();
      for (std::size_t i = 0; i < fit.sizes.size(); ++i) {
        j["ed"].push_back({{"L", fit.sizes[i]}, {"energy_per_spin", fit.per_spin[i]}});
      }
    }
    write_json(args.out / "reference.json", j);
    log << j.dump(2) << "\n";
    return kExitOk;
  } catch (const Error& e) {
    log << "oracle: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_gradcheck(const GradcheckArgs& args, std::ostream& log) {
  try {
    const int b = resolve_blocking(args.m, 0);
    const auto preset = models::ModelPreset::parse(args.model);
    const auto h = args.zero_h ? channel::Operator3::zero(args.m) : models::build_local_h(preset.params, b);
    tensnet::Rng rng(args.seed);
    const auto ansatz = channel::MeraAnsatz::random(args.m, b, rng);
    channel::FixedPointOptions fo;
    fo.method = channel::FixedPointMethod::kKrylov;
    const auto rho = channel::fixed_point(ansatz, std::nullopt, fo).rho;

    opt::GradcheckOptions go;
    go.directions = args.directions;
    go.step = args.step;
    std::ostringstream csv;
    csv << "target,direction,analytic,numeric,rel_err\n";
    std::size_t failures = 0;
    double worst = 0.0;
    for (const auto target : {opt::Target::kChi, opt::Target::kLambda}) {
      std::optional<tensnet::Tensor> corrupted;
      if (args.corrupt) {
        corrupted = opt::linearized_gradient(ansatz, rho, h, target);
        corrupted->data()[0] += tensnet::Complex{1.0, -1.0};
      }
      const auto checks = opt::gradient_check(ansatz, rho, h, target, rng, go, corrupted ? &*corrupted : nullptr);
      for (const auto& c : checks) {
        csv << opt::target_name(target) << ',' << c.index << ',' << sci(c.analytic) << ',' << sci(c.numeric) << ','
            << sci(c.rel_err) << '\n';
        worst = std::max(worst, c.rel_err);
        if (!(c.rel_err <= args.tol)) {
          ++failures;
          log << "FAIL " << opt::target_name(target) << " direction " << c.index << ": analytic " << sci(c.analytic)
              << " numeric " << sci(c.numeric) << " rel_err " << c.rel_err << "\n";
        }
      }
    }
    write_text(args.out / "gradcheck.csv", csv.str());
    log << "gradcheck m=" << args.m << " directions=" << args.directions << " worst rel_err " << worst << " -> "
        << (failures == 0 ? "pass" : "FAIL") << "\n";
    return failures == 0 ? kExitOk : kExitValidation;
  } catch (const Error& e) {
    log << "gradcheck: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace qumera::cli
