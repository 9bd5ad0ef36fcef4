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


#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qobj/info_measures.hpp"
#include "qobj/sbs.hpp"
#include "qobj/spin_model.hpp"

namespace qobj::harness {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Input failed validation (bad config field, unparsable state file, ...).
/// The CLI maps it to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

struct Tolerances {
  double qd_delta = 0.05;
  double sbs = 1e-9;
  StrongQdTolerances strong_qd;
};

/// Everything a sweep needs. Physics fields feed the fingerprint; `jobs`,
/// `out_dir` and `format` do not.
struct ExperimentConfig {
  std::size_t n = 14;
  /// Explicit couplings; drawn from `seed` when absent.
  std::optional<std::vector<double>> couplings;
  std::optional<std::uint64_t> seed;
  double lambda = 0.1;
  EulerAngles euler{0.0, 0.625 * 3.14159265358979323846, 0.0};
  CMatrix system_state = CMatrix::Constant(2, 2, 0.5);
  std::vector<double> times{100.0};
  /// Empty means {1/N, 2/N, ..., 1}.
  std::vector<double> f_grid;
  FractionConvention convention = FractionConvention::prefix;
  std::size_t sample_count = 32;
  /// Observed fraction split into this many consecutive macrofractions.
  std::size_t macrofractions = 1;
  OptimizerConfig optimizer;
  Tolerances tolerances;

  std::size_t jobs = 1;
  std::string out_dir = ".";
  std::string format = "csv";

  /// Throws ValidationError.
  void validate() const;
  std::vector<double> resolved_f_grid() const;
  /// Couplings as used by the sweep (drawn when not explicit). Throws
  /// ValidationError when neither couplings nor a seed is available.
  std::vector<double> resolved_couplings() const;
  bool randomized() const { return !couplings.has_value(); }
};

/// Parses a config document; unknown keys are rejected.
ExperimentConfig parse_config(const json& doc);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Physics fields as JSON (sorted keys), couplings resolved.
json physics_json(const ExperimentConfig& cfg);
/// FNV-1a 64 of physics_json(cfg).dump(), as 16 hex digits.
std::string fingerprint(const ExperimentConfig& cfg);

struct CurveRow {
  double t = 0.0;
  FractionResult result;
};

/// Rows ordered by (t, f) irrespective of `cfg.jobs`. Bound-only sweeps
/// have no dimension limit; with information the largest fraction must fit
/// the environment-entropy guard (DimensionGuardError otherwise).
std::vector<CurveRow> run_sweep(const ExperimentConfig& cfg, bool with_information);

/// Writes the sweep in cfg.format into cfg.out_dir and returns the paths.
/// csv: one <stem>_t<i>.csv per time plus <stem>.meta.json;
/// json: <stem>.json with the fingerprint on every row; svg: <stem>.svg.
std::vector<std::filesystem::path> write_sweep(const ExperimentConfig& cfg, const std::vector<CurveRow>& rows,
                                               bool with_information, const std::string& stem);

std::string format_double(double v);
std::string curve_csv(const std::vector<CurveRow>& rows, double t, bool with_information);
std::string curve_svg(const std::vector<CurveRow>& rows, bool with_information, const std::string& title);

// --- state files ----------------------------------------------------------------

struct StateFile {
  DensityMatrix state;
  std::size_t system_index = 0;
  json provenance = json::object();
  json declared_checks = json::object();
};

json state_to_json(const StateFile& file);
/// Throws ValidationError for malformed documents and InvariantError for
/// invalid matrices.
StateFile state_from_json(const json& doc);
StateFile read_state(const std::filesystem::path& path);
void write_state(const std::filesystem::path& path, const StateFile& file);

// --- reports --------------------------------------------------------------------

json to_json(const SbsReport& r);
json to_json(const StrongQdReport& r);
json to_json(const QdReport& r);
json to_json(const MeasuresReport& r);
json to_json(const OptimizerConfig& cfg);

struct CheckSelection {
  bool sbs = false;
  bool strong_qd = false;
  bool qd = false;
  bool measures = false;
};

/// Comma-separated subset of sbs,strong_qd,qd,measures.
CheckSelection parse_checks(const std::string& list);

/// Runs the selected checks. A check whose preconditions fail records an
/// "error" entry instead of aborting the report.
json check_state_report(const StateFile& file, const CheckSelection& checks, const ExperimentConfig& cfg);

// --- fixtures ---------------------------------------------------------------------

struct Fixture {
  std::string name;
  StateFile file;
};

/// Canonical fixture set (SBS samples, Markov blocks, star graph and
/// branching states, classical-classical and contrast states).
std::vector<Fixture> canonical_fixtures(std::uint64_t seed);

struct FixtureVerdict {
  std::string name;
  bool pass = true;
  /// One entry per declared check: {"check", "expected", "actual", "pass"}.
  json details = json::array();
};

FixtureVerdict verify_fixture(const Fixture& fixture, const ExperimentConfig& cfg);

}  // namespace qobj::harness
