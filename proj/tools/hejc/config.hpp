#pragma once

// Run configuration for the hejc tool. The file format is flat key-value
// text with dotted sections; every physical key carries its unit:
//
//   # comment
//   preset = paper-primary
//   trap.e_perp_v_per_m = 1e4
//   drive.sideband = red
//
// Unknown or repeated keys are rejected.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hejc/sideband.hpp"

namespace hejc::app {

enum class OutputFormat { csv, json };

struct RunConfig {
  std::string preset = "none";

  // trap
  std::optional<double> e_perp;  // V/m, 1e4 unless a charge is given
  std::optional<double> charge;  // C
  double depth = 5e-7;  // m
  double temperature = 1.2;  // K

  // drive
  double e_z = 1e2;  // V/m
  double phase = 0.0;
  Sideband sideband = Sideband::carrier;
  double coherence_budget = 1e-4;  // s

  // solver
  int n_levels = 5;
  double z_max_bohr = 60.0;
  double spacing_bohr = 1.0 / 200.0;
  bool refinement_check = true;
  int n_max = 30;
  double tolerance = 1e-6;

  // scenario
  std::string scenario_name = "physical";
  std::optional<int> scenario_n_max;
  std::string model = "analytic";
  int initial_m = 0;
  std::string initial_level = "g";
  std::optional<double> duration;  // s
  int samples = 101;
  double omega_scale = 1.0;
  double scaled_eta = 0.01;

  // thermal
  std::optional<double> thermal_nu;  // rad/s
  std::vector<double> temperatures{4.2, 2.2, 1.2};
  int thermal_n_max = 30;

  // cooling
  std::string cool_schedule = "sweep";
  int target_m = 1;
  int sweep_top = 10;
  int max_cycles = 200;
  double target_ground = 0.99;
  double initial_mean_m = 2.0;

  // output
  OutputFormat format = OutputFormat::csv;
  std::string output_path;
  std::string eigenfunctions_path;
  int eigenfunctions_stride = 10;

  /// Key -> value text of every setting, for echoing into output files.
  std::map<std::string, std::string> resolved() const;
};

/// Names accepted by `preset` / --scenario.
const std::vector<std::string>& preset_names();

/// Applies a named preset. Throws ConfigError for unknown names.
void apply_preset(RunConfig& cfg, std::string_view name);

/// Parses the text format; the preset key is applied before all other keys
/// regardless of its position. Throws ConfigError.
RunConfig parse_config(std::istream& in, std::optional<std::string> preset_override = {});
RunConfig load_config(const std::string& path, std::optional<std::string> preset_override = {});

/// Sets one key from its text value. Throws ConfigError.
void set_key(RunConfig& cfg, std::string_view key, std::string_view value);

}  // namespace hejc::app
