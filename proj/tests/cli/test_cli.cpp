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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const fs::path kSchemas = QUMERA_SCHEMA_DIR;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "qumera_cli_test" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

// Runs the CLI with `args`, output captured to <dir>/log.txt; returns the exit code.
int run(const std::string& args, const fs::path& dir, const std::string& env = "") {
  const std::string cmd = env + " '" + std::string(QUMERA_CLI_PATH) + "' " + args + " > '" +
                          (dir / "log.txt").string() + "' 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json load(const fs::path& p) { return json::parse(slurp(p)); }

// The subset of JSON Schema the shipped schemas use: type (string or list),
// required, properties, items, enum.
void validate(const json& value, const json& schema, const std::string& where, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    std::vector<std::string> types;
    if (schema["type"].is_array()) {
      for (const auto& t : schema["type"]) types.push_back(t);
    } else {
      types.push_back(schema["type"]);
    }
    bool ok = false;
    for (const auto& t : types) {
      ok = ok || (t == "object" && value.is_object()) || (t == "array" && value.is_array()) ||
           (t == "string" && value.is_string()) || (t == "boolean" && value.is_boolean()) ||
           (t == "null" && value.is_null()) || (t == "number" && value.is_number()) ||
           (t == "integer" && value.is_number_integer());
    }
    if (!ok) {
      errors.push_back(where + ": unexpected type " + value.type_name());
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& e : schema["enum"]) found = found || e == value;
    if (!found) errors.push_back(where + ": value not in enum");
  }
  if (value.is_object()) {
    for (const auto& key : schema.value("required", json::array())) {
      if (!value.contains(key.get<std::string>())) errors.push_back(where + ": missing " + key.get<std::string>());
    }
    if (schema.contains("properties")) {
      for (const auto& [key, sub] : schema["properties"].items()) {
        if (value.contains(key)) validate(value[key], sub, where + "." + key, errors);
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (std::size_t i = 0; i < value.size(); ++i) {
      validate(value[i], schema["items"], where + "[" + std::to_string(i) + "]", errors);
    }
  }
}

void expect_schema(const fs::path& file, const std::string& schema) {
  std::vector<std::string> errors;
  validate(load(file), load(kSchemas / schema), file.filename().string(), errors);
  for (const auto& e : errors) ADD_FAILURE() << e;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(p));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

void expect_csv(const fs::path& file) {
  const json layout = load(kSchemas / "csv.schema.json").at("files").at(file.filename().string());
  const auto rows = read_csv(file);
  ASSERT_FALSE(rows.empty());
  ASSERT_EQ(rows[0].size(), layout.size());
  for (std::size_t c = 0; c < layout.size(); ++c) EXPECT_EQ(rows[0][c], layout[c]["name"]);
  // Scientific notation with at least 12 significant digits.
  const std::regex number(R"(-?\d\.\d{11,}e[+-]\d+)");
  const std::regex integer(R"(-?\d+)");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    ASSERT_EQ(rows[r].size(), layout.size()) << file << " row " << r;
    for (std::size_t c = 0; c < layout.size(); ++c) {
      std::string kind = layout[c]["kind"];
      const std::string& cell = rows[r][c];
      if (kind.back() == '?') {
        if (cell.empty()) continue;
        kind.pop_back();
      }
      if (kind == "number") EXPECT_TRUE(std::regex_match(cell, number)) << file << " " << cell;
      if (kind == "integer") EXPECT_TRUE(std::regex_match(cell, integer)) << file << " " << cell;
      if (layout[c].contains("enum")) {
        bool found = false;
        for (const auto& e : layout[c]["enum"]) found = found || e == cell;
        EXPECT_TRUE(found) << file << " " << cell;
      }
    }
  }
}

TEST(Oracle, IsingEnergy) {
  const auto dir = scratch("oracle_ising");
  ASSERT_EQ(run("oracle --model ising --out " + dir.string(), dir), 0);
  const auto j = load(dir / "reference.json");
  EXPECT_NEAR(j.at("energy").get<double>(), -4.0 / std::numbers::pi, 1e-7);
  expect_schema(dir / "reference.json", "reference.schema.json");
}

TEST(Oracle, XxExtrapolationMatchesIntegral) {
  const auto dir = scratch("oracle_xx");
  ASSERT_EQ(run("oracle --model xxz:0 --ed-max-L 16 --out " + dir.string(), dir), 0);
  const auto j = load(dir / "reference.json");
  EXPECT_NEAR(j.at("energy").get<double>(), j.at("free_fermion_energy").get<double>(), 1e-4);
  expect_schema(dir / "reference.json", "reference.schema.json");
}

TEST(Oracle, NonCriticalPresetIsUsageError) {
  const auto dir = scratch("oracle_bad");
  EXPECT_EQ(run("oracle --model xxz:2 --out " + dir.string(), dir), 1);
}

TEST(Optimize, ZeroSweepsReportsInitialEnergy) {
  const auto dir = scratch("opt_zero");
  ASSERT_EQ(run("optimize --model ising --m 2 --sweeps 0 --out " + dir.string(), dir), 0);
  const auto s = load(dir / "summary.json");
  EXPECT_EQ(s.at("sweeps_run"), 0);
  const auto trace = read_csv(dir / "trace.csv");
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_DOUBLE_EQ(std::stod(trace[1][2]), s.at("energy").get<double>());
  EXPECT_TRUE(fs::exists(dir / "ansatz.ckpt"));
  expect_schema(dir / "summary.json", "summary.schema.json");
  expect_csv(dir / "trace.csv");
}

TEST(Optimize, SameSeedGivesByteIdenticalTrace) {
  const auto a = scratch("opt_det_a"), b = scratch("opt_det_b");
  const std::string args = "optimize --model ising --m 2 --sweeps 8 --seed 7 --out ";
  ASSERT_EQ(run(args + a.string(), a), 0);
  ASSERT_EQ(run(args + b.string(), b), 0);
  EXPECT_EQ(slurp(a / "trace.csv"), slurp(b / "trace.csv"));
  EXPECT_EQ(slurp(a / "summary.json"), slurp(b / "summary.json"));
  EXPECT_EQ(slurp(a / "ansatz.ckpt"), slurp(b / "ansatz.ckpt"));
  expect_csv(a / "trace.csv");
}

TEST(Optimize, StarvedSolverExitsWithAbort) {
  const auto dir = scratch("opt_abort");
  EXPECT_EQ(run("optimize --model ising --m 2 --sweeps 10 --fp-max-iter 1 --out " + dir.string(), dir), 2);
}

TEST(Optimize, UnwritableOutputIsExitOne) {
  const auto dir = scratch("opt_io");
  std::ofstream(dir / "blocker") << "file, not a directory";
  EXPECT_EQ(run("optimize --model ising --m 2 --sweeps 0 --out " + (dir / "blocker" / "sub").string(), dir), 1);
}

TEST(Optimize, BadArgumentsAreUsageErrors) {
  const auto dir = scratch("opt_usage");
  EXPECT_EQ(run("optimize --m 3 --sweeps 0 --out " + dir.string(), dir), 1);
  EXPECT_EQ(run("optimize --epsilon-decay 2 --out " + dir.string(), dir), 1);
  EXPECT_EQ(run("optimize --no-such-flag", dir), 1);
  EXPECT_EQ(run("", dir), 1);
}

TEST(Config, FlagsOverrideFileOverrideDefaults) {
  const auto dir = scratch("config");
  std::ofstream(dir / "run.cfg") << "# comment\nsweeps = 2\nseed = 5\nmoves = 3\nm = 2\n";
  ASSERT_EQ(run("optimize --config " + (dir / "run.cfg").string() + " --seed 9 --out " + dir.string(), dir), 0);
  const auto c = load(dir / "summary.json").at("config");
  EXPECT_EQ(c.at("sweeps"), 2);
  EXPECT_EQ(c.at("moves_per_tensor"), 3);
  EXPECT_EQ(c.at("seed"), 9);
  EXPECT_DOUBLE_EQ(c.at("epsilon_start").get<double>(), 0.1);
}

TEST(Config, UnknownKeyIsUsageError) {
  const auto dir = scratch("config_bad");
  std::ofstream(dir / "run.cfg") << "sweeps = 2\nwarp_factor = 9\n";
  EXPECT_EQ(run("optimize --config " + (dir / "run.cfg").string() + " --out " + dir.string(), dir), 1);
  EXPECT_EQ(run("optimize --config " + (dir / "missing.cfg").string() + " --out " + dir.string(), dir), 1);
}

TEST(Spectrum, ReportsLeadingModulusOne) {
  const auto dir = scratch("spectrum");
  ASSERT_EQ(run("optimize --model ising --m 2 --sweeps 5 --out " + dir.string(), dir), 0);
  ASSERT_EQ(run("spectrum --checkpoint " + (dir / "ansatz.ckpt").string() + " --model ising --k 8 --out " +
                    dir.string(),
                dir),
            0);
  const auto r = load(dir / "report.json");
  EXPECT_NEAR(r.at("eigenvalues")[0].at("modulus").get<double>(), 1.0, 1e-8);
  EXPECT_EQ(r.at("eigenvalues").size(), 8u);
  expect_schema(dir / "report.json", "report.schema.json");
  expect_csv(dir / "spectrum.csv");
}

TEST(Spectrum, MissingOrCorruptCheckpointIsExitOne) {
  const auto dir = scratch("spectrum_bad");
  EXPECT_EQ(run("spectrum --checkpoint " + (dir / "none.ckpt").string() + " --out " + dir.string(), dir), 1);
  std::ofstream(dir / "bad.ckpt") << "qumera-ansatz m=2 b=1 seed=1 iteration=0\ngarbage";
  EXPECT_EQ(run("spectrum --checkpoint " + (dir / "bad.ckpt").string() + " --out " + dir.string(), dir), 1);
}

TEST(Sweep, EmptyOrOutOfRangeDeltasAreUsageErrors) {
  const auto dir = scratch("sweep_bad");
  EXPECT_EQ(run("sweep --m 2 --out " + dir.string(), dir), 1);
  EXPECT_EQ(run("sweep --m 2 --deltas 0.5,1.5 --out " + dir.string(), dir), 1);
}

TEST(Sweep, OutputIsOrderedAndIndependentOfThreads) {
  const auto a = scratch("sweep_a"), b = scratch("sweep_b");
  const std::string args = "sweep --m 2 --sweeps 2 --k 8 --deltas 0.8,0.2,0.5 --progress-every 0 --ed-max-L 12 --out ";
  ASSERT_EQ(run(args + a.string(), a, "QUMERA_THREADS=1"), 0);
  ASSERT_EQ(run(args + b.string(), b, "QUMERA_THREADS=3"), 0);
  EXPECT_EQ(slurp(a / "sweep.csv"), slurp(b / "sweep.csv"));
  const auto rows = read_csv(a / "sweep.csv");
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_LT(std::stod(rows[1][0]), std::stod(rows[2][0]));
  EXPECT_LT(std::stod(rows[2][0]), std::stod(rows[3][0]));
  for (std::size_t r = 1; r < rows.size(); ++r) EXPECT_EQ(rows[r].back(), "ok");
  expect_csv(a / "sweep.csv");
  for (const auto* tag : {"delta_+0.2000", "delta_+0.5000", "delta_+0.8000"}) {
    expect_schema(a / tag / "summary.json", "summary.schema.json");
    expect_schema(a / tag / "report.json", "report.schema.json");
  }
}

TEST(Gradcheck, PassesOnIsing) {
  const auto dir = scratch("grad");
  EXPECT_EQ(run("gradcheck --m 2 --directions 20 --out " + dir.string(), dir), 0);
  expect_csv(dir / "gradcheck.csv");
}

TEST(Gradcheck, ZeroHamiltonianPasses) {
  const auto dir = scratch("grad_zero");
  EXPECT_EQ(run("gradcheck --m 2 --zero-h --out " + dir.string(), dir), 0);
}

TEST(Gradcheck, CorruptedGradientIsValidationFailure) {
  const auto dir = scratch("grad_bad");
  EXPECT_EQ(run("gradcheck --m 2 --corrupt-gradient --out " + dir.string(), dir), 3);
  EXPECT_NE(slurp(dir / "log.txt").find("direction"), std::string::npos);
}

}  // namespace
