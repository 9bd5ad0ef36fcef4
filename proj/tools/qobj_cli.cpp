// Copyright 2026 The qobjectivity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// qobj: partial-information plots, SBS bounds and state checks.
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qobj/harness.hpp"

namespace fs = std::filesystem;
using namespace qobj;
using namespace qobj::harness;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitDimension = 3;
constexpr std::uint64_t kDefaultFixtureSeed = 1;

struct CommonFlags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> jobs;
  std::string out;
  std::string format;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "JSON experiment config");
  cmd->add_option("--seed", f.seed, "64-bit seed (required for randomized runs)");
  cmd->add_option("--jobs", f.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--out", f.out, "output directory");
  cmd->add_option("--format", f.format, "csv, json or svg")->check(CLI::IsMember({"csv", "json", "svg"}));
}

ExperimentConfig resolve(const CommonFlags& f) {
  ExperimentConfig cfg = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
  if (f.seed) cfg.seed = f.seed;
  if (f.jobs) cfg.jobs = *f.jobs;
  if (!f.out.empty()) cfg.out_dir = f.out;
  if (!f.format.empty()) cfg.format = f.format;
  cfg.validate();
  return cfg;
}

void emit(const json& doc, const std::string& out_dir, const std::string& name) {
  const std::string text = doc.dump(2) + "\n";
  if (out_dir.empty()) {
    std::cout << text;
    return;
  }
  fs::create_directories(out_dir);
  const fs::path path = fs::path(out_dir) / name;
  std::ofstream(path, std::ios::binary) << text;
  std::cout << path.string() << "\n";
}

int run_sweep_command(const CommonFlags& f, bool with_information, const std::string& stem) {
  const ExperimentConfig cfg = resolve(f);
  const auto rows = run_sweep(cfg, with_information);
  for (const auto& path : write_sweep(cfg, rows, with_information, stem)) std::cout << path.string() << "\n";
  return 0;
}

int run_fixtures(const CommonFlags& f) {
  CommonFlags flags = f;
  if (!flags.seed) flags.seed = kDefaultFixtureSeed;
  const ExperimentConfig cfg = resolve(flags);
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);

  json summary = {{"tool_version", kToolVersion}, {"seed", *cfg.seed}, {"fixtures", json::array()}};
  bool all = true;
  for (const auto& fixture : canonical_fixtures(*cfg.seed)) {
    const fs::path path = dir / (fixture.name + ".json");
    write_state(path, fixture.file);
    // Verify what was written, not the in-memory copy.
    const Fixture reread{fixture.name, read_state(path)};
    const FixtureVerdict verdict = verify_fixture(reread, cfg);
    all = all && verdict.pass;
    summary["fixtures"].push_back({{"name", verdict.name}, {"file", path.filename().string()}, {"pass", verdict.pass},
                                   {"checks", verdict.details}});
    std::printf("%-26s %s\n", fixture.name.c_str(), verdict.pass ? "PASS" : "FAIL");
  }
  std::ofstream(dir / "fixtures_report.json", std::ios::binary) << summary.dump(2) << "\n";
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum objectivity diagnostics: QD, SBS and the spin-spin case study"};
  app.require_subcommand(1);

  CommonFlags pip_flags, bound_flags, check_flags, fixture_flags, measures_flags;
  auto* pip = app.add_subcommand("pip", "partial information plot with SBS bound");
  add_common(pip, pip_flags);
  auto* bound = app.add_subcommand("sbs-bound", "SBS distance bound only (no dimension limit)");
  add_common(bound, bound_flags);

  std::string check_file, check_list = "all";
  auto* check = app.add_subcommand("check-state", "run SBS / strong QD / QD / measures checks on a state file");
  check->add_option("state", check_file, "state JSON")->required();
  check->add_option("--checks", check_list, "comma list of sbs,strong_qd,qd,measures or all");
  add_common(check, check_flags);

  auto* fixtures = app.add_subcommand("fixtures", "write and verify the canonical fixture set");
  add_common(fixtures, fixture_flags);

  std::string measures_file;
  auto* measures = app.add_subcommand("measures", "information measures of a state file");
  measures->add_option("state", measures_file, "state JSON")->required();
  add_common(measures, measures_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*pip) return run_sweep_command(pip_flags, true, "pip");
    if (*bound) return run_sweep_command(bound_flags, false, "sbs_bound");
    if (*check) {
      const ExperimentConfig cfg = resolve(check_flags);
      const CheckSelection sel = parse_checks(check_list);
      const StateFile file = read_state(check_file);
      emit(check_state_report(file, sel, cfg), check_flags.out, fs::path(check_file).stem().string() + ".report.json");
      return 0;
    }
    if (*fixtures) return run_fixtures(fixture_flags);
    if (*measures) {
      const ExperimentConfig cfg = resolve(measures_flags);
      const StateFile file = read_state(measures_file);
      json doc = {{"tool_version", kToolVersion}, {"dims", file.state.dims()}, {"system_index", file.system_index},
                  {"measures", to_json(measures_report(file.state, file.system_index, cfg.optimizer))}};
      emit(doc, measures_flags.out, fs::path(measures_file).stem().string() + ".measures.json");
      return 0;
    }
  } catch (const DimensionGuardError& e) {
    std::fprintf(stderr, "dimension guard: %s (requested %zu, limit %zu)\n", e.what(), e.requested(), e.limit());
    return kExitDimension;
  } catch (const InvariantError& e) {
    std::fprintf(stderr, "invalid input: invariant '%s' violated by %.3g: %s\n", e.invariant().c_str(), e.magnitude(),
                 e.what());
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "invalid input: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
