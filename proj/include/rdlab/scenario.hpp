// Copyright 2026 The rdlab Authors
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
#include <iosfwd>
#include <numbers>
#include <string>
#include <string_view>

#include "json.hpp"

#include "rdlab/dynamics.hpp"
#include "rdlab/error.hpp"

namespace rdlab {

enum class Scenario { Reproduce, Trajectory, Theorem, CpReport };

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitClaimFailed = 1,
  kExitConfigError = 2,
  kExitIoError = 3,
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

struct ScenarioConfig {
  Scenario scenario = Scenario::Reproduce;
  double alpha_re = std::numbers::sqrt2 / 2;
  double alpha_im = 0.0;
  double beta_re = std::numbers::sqrt2 / 2;
  double beta_im = 0.0;
  double t_start = 0.0;
  double t_end = 2 * std::numbers::pi;
  int steps = 100;
  std::uint64_t seed = 20010611;
  int trials = 100;
  double tol = 1e-10;
  int d_A = 2;
  int d_B = 2;
  std::string output_path;  // empty: write to the caller's stream

  /// Throws ConfigError on the first violated constraint.
  void validate() const;
  /// Validated amplitudes (no renormalization).
  AmplitudePair amplitudes() const;
  std::vector<double> time_grid() const;
};

/// Artifact of one scenario run. `artifact` is CSV for `trajectory` and JSON
/// otherwise; `summary` is human-readable.
struct RunOutput {
  int exit_code = kExitOk;
  std::string artifact;
  std::string summary;
};

std::string_view scenario_name(Scenario s);
Scenario parse_scenario(std::string_view name);

/// Accepts plain numbers and multiples/fractions of pi: "pi", "-pi",
/// "pi/2", "3pi/4", "3*pi/4", "2pi", "0.25*pi", "1.5". Throws ConfigError.
double parse_time(std::string_view text);

/// "dAxdB", e.g. "2x3". Throws ConfigError.
std::pair<int, int> parse_dims(std::string_view text);

/// Overlays the keys present in `j` onto `base`. Recognized keys:
/// alpha_re alpha_im beta_re beta_im t_start t_end steps seed trials tol
/// dims out. Unknown keys raise ConfigError.
ScenarioConfig apply_json_config(const nlohmann::json& j, ScenarioConfig base);

RunOutput run_reproduce(const ScenarioConfig& cfg);
RunOutput run_trajectory(const ScenarioConfig& cfg);
RunOutput run_theorem(const ScenarioConfig& cfg);
RunOutput run_cp_report(const ScenarioConfig& cfg);

/// Validates cfg, runs its scenario and writes the artifact to
/// cfg.output_path (or `out` when empty) and the summary to `log`.
/// Returns the exit code; never throws for config or I/O problems.
int run_scenario(const ScenarioConfig& cfg, std::ostream& out, std::ostream& log);

/// CSV header of the trajectory artifact.
std::string trajectory_csv_header();

}  // namespace rdlab
