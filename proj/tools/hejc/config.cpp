#include "config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <set>
#include <sstream>

#include "hejc/error.hpp"
#include "hejc/format.hpp"

namespace hejc::app {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("config: key '" + std::string(key) + "' expects a number, got '" +
                      std::string(text) + "'");
  }
  return v;
}

int to_int(std::string_view key, std::string_view text) {
  int v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("config: key '" + std::string(key) + "' expects an integer, got '" +
                      std::string(text) + "'");
  }
  return v;
}

bool to_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  throw ConfigError("config: key '" + std::string(key) + "' expects true/false");
}

std::string one_of(std::string_view key, std::string_view text,
                   std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed) {
    if (a == text) return std::string(text);
  }
  std::string msg = "config: key '" + std::string(key) + "' must be one of";
  for (auto a : allowed) msg += " " + std::string(a);
  throw ConfigError(msg);
}

std::vector<double> to_list(std::string_view key, std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(to_double(key, trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) throw ConfigError("config: key '" + std::string(key) + "' needs values");
  return out;
}

using Setter = std::function<void(RunConfig&, std::string_view key, std::string_view value)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"preset", [](RunConfig& c, auto, auto v) { apply_preset(c, v); }},
      {"trap.e_perp_v_per_m", [](RunConfig& c, auto k, auto v) { c.e_perp = to_double(k, v); }},
      {"trap.charge_c", [](RunConfig& c, auto k, auto v) { c.charge = to_double(k, v); }},
      {"trap.depth_m", [](RunConfig& c, auto k, auto v) { c.depth = to_double(k, v); }},
      {"trap.temperature_k", [](RunConfig& c, auto k, auto v) { c.temperature = to_double(k, v); }},
      {"drive.e_z_v_per_m", [](RunConfig& c, auto k, auto v) { c.e_z = to_double(k, v); }},
      {"drive.phase_rad", [](RunConfig& c, auto k, auto v) { c.phase = to_double(k, v); }},
      {"drive.sideband",
       [](RunConfig& c, auto, auto v) {
         try {
           c.sideband = parse_sideband(v);
         } catch (const std::invalid_argument& e) {
           throw ConfigError(std::string("config: ") + e.what());
         }
       }},
      {"drive.coherence_budget_s",
       [](RunConfig& c, auto k, auto v) { c.coherence_budget = to_double(k, v); }},
      {"solver.n_levels", [](RunConfig& c, auto k, auto v) { c.n_levels = to_int(k, v); }},
      {"solver.z_max_bohr", [](RunConfig& c, auto k, auto v) { c.z_max_bohr = to_double(k, v); }},
      {"solver.spacing_bohr", [](RunConfig& c, auto k, auto v) { c.spacing_bohr = to_double(k, v); }},
      {"solver.refinement_check",
       [](RunConfig& c, auto k, auto v) { c.refinement_check = to_bool(k, v); }},
      {"solver.n_max", [](RunConfig& c, auto k, auto v) { c.n_max = to_int(k, v); }},
      {"solver.tolerance", [](RunConfig& c, auto k, auto v) { c.tolerance = to_double(k, v); }},
      {"scenario.name",
       [](RunConfig& c, auto k, auto v) {
         c.scenario_name = one_of(k, v, {"physical", "scaled-red-sideband", "literal-carrier"});
       }},
      {"scenario.model",
       [](RunConfig& c, auto k, auto v) { c.model = one_of(k, v, {"analytic", "full", "lamb_dicke"}); }},
      {"scenario.n_max", [](RunConfig& c, auto k, auto v) { c.scenario_n_max = to_int(k, v); }},
      {"scenario.initial_m", [](RunConfig& c, auto k, auto v) { c.initial_m = to_int(k, v); }},
      {"scenario.initial_level",
       [](RunConfig& c, auto k, auto v) { c.initial_level = one_of(k, v, {"g", "e"}); }},
      {"scenario.duration_s", [](RunConfig& c, auto k, auto v) { c.duration = to_double(k, v); }},
      {"scenario.samples", [](RunConfig& c, auto k, auto v) { c.samples = to_int(k, v); }},
      {"scenario.omega_scale", [](RunConfig& c, auto k, auto v) { c.omega_scale = to_double(k, v); }},
      {"scenario.eta", [](RunConfig& c, auto k, auto v) { c.scaled_eta = to_double(k, v); }},
      {"thermal.nu_rad_per_s", [](RunConfig& c, auto k, auto v) { c.thermal_nu = to_double(k, v); }},
      {"thermal.temperatures_k", [](RunConfig& c, auto k, auto v) { c.temperatures = to_list(k, v); }},
      {"thermal.n_max", [](RunConfig& c, auto k, auto v) { c.thermal_n_max = to_int(k, v); }},
      {"cool.schedule",
       [](RunConfig& c, auto k, auto v) {
         c.cool_schedule = one_of(k, v, {"sweep", "fixed", "idealized"});
       }},
      {"cool.target_m", [](RunConfig& c, auto k, auto v) { c.target_m = to_int(k, v); }},
      {"cool.sweep_top", [](RunConfig& c, auto k, auto v) { c.sweep_top = to_int(k, v); }},
      {"cool.max_cycles", [](RunConfig& c, auto k, auto v) { c.max_cycles = to_int(k, v); }},
      {"cool.target_ground", [](RunConfig& c, auto k, auto v) { c.target_ground = to_double(k, v); }},
      {"cool.initial_mean_m", [](RunConfig& c, auto k, auto v) { c.initial_mean_m = to_double(k, v); }},
      {"output.format",
       [](RunConfig& c, auto k, auto v) {
         c.format = one_of(k, v, {"csv", "json"}) == "csv" ? OutputFormat::csv : OutputFormat::json;
       }},
      {"output.path", [](RunConfig& c, auto, auto v) { c.output_path = std::string(v); }},
      {"output.eigenfunctions_path",
       [](RunConfig& c, auto, auto v) { c.eigenfunctions_path = std::string(v); }},
      {"output.eigenfunctions_stride",
       [](RunConfig& c, auto k, auto v) { c.eigenfunctions_stride = to_int(k, v); }},
  };
  return table;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? format_sci(*v) : "auto"; }

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"none", "paper-primary", "paper-large-eta"};
  return names;
}

void apply_preset(RunConfig& cfg, std::string_view name) {
  if (name == "none") {
  } else if (name == "paper-primary") {
    cfg.e_perp = 1e4;
    cfg.depth = 5e-7;
    cfg.e_z = 1e2;
  } else if (name == "paper-large-eta") {
    cfg.e_perp = 1e-5;
    cfg.depth = 1e-2;
    cfg.e_z = 1e2;
  } else {
    throw ConfigError("config: unknown preset '" + std::string(name) + "'");
  }
  cfg.preset = std::string(name);
}

void set_key(RunConfig& cfg, std::string_view key, std::string_view value) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("config: unknown key '" + std::string(key) + "'");
  it->second(cfg, key, value);
}

RunConfig parse_config(std::istream& in, std::optional<std::string> preset_override) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::set<std::string, std::less<>> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config: line " + std::to_string(lineno) + " is not 'key = value'");
    }
    std::string key(trim(text.substr(0, eq)));
    std::string value(trim(text.substr(eq + 1)));
    if (!seen.insert(key).second) {
      throw ConfigError("config: key '" + key + "' given twice");
    }
    entries.emplace_back(std::move(key), std::move(value));
  }

  RunConfig cfg;
  for (const auto& [k, v] : entries) {
    if (k == "preset") apply_preset(cfg, v);
  }
  if (preset_override) apply_preset(cfg, *preset_override);
  for (const auto& [k, v] : entries) {
    if (k != "preset") set_key(cfg, k, v);
  }
  return cfg;
}

RunConfig load_config(const std::string& path, std::optional<std::string> preset_override) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  return parse_config(in, std::move(preset_override));
}

std::map<std::string, std::string> RunConfig::resolved() const {
  std::map<std::string, std::string> m;
  m["preset"] = preset;
  m["trap.e_perp_v_per_m"] =
      e_perp ? format_sci(*e_perp) : (charge ? std::string("from_charge") : format_sci(1e4));
  m["trap.charge_c"] = fmt_opt(charge);
  m["trap.depth_m"] = format_sci(depth);
  m["trap.temperature_k"] = format_sci(temperature);
  m["drive.e_z_v_per_m"] = format_sci(e_z);
  m["drive.phase_rad"] = format_sci(phase);
  m["drive.sideband"] = std::string(to_string(sideband));
  m["drive.coherence_budget_s"] = format_sci(coherence_budget);
  m["solver.n_levels"] = std::to_string(n_levels);
  m["solver.z_max_bohr"] = format_sci(z_max_bohr);
  m["solver.spacing_bohr"] = format_sci(spacing_bohr);
  m["solver.refinement_check"] = refinement_check ? "true" : "false";
  m["solver.n_max"] = std::to_string(n_max);
  m["solver.tolerance"] = format_sci(tolerance);
  m["scenario.name"] = scenario_name;
  m["scenario.model"] = model;
  m["scenario.n_max"] = scenario_n_max ? std::to_string(*scenario_n_max) : "auto";
  m["scenario.initial_m"] = std::to_string(initial_m);
  m["scenario.initial_level"] = initial_level;
  m["scenario.duration_s"] = fmt_opt(duration);
  m["scenario.samples"] = std::to_string(samples);
  m["scenario.omega_scale"] = format_sci(omega_scale);
  m["scenario.eta"] = format_sci(scaled_eta);
  m["thermal.nu_rad_per_s"] = fmt_opt(thermal_nu);
  std::string temps;
  for (std::size_t i = 0; i < temperatures.size(); ++i) {
    temps += (i ? "," : "") + format_sci(temperatures[i]);
  }
  m["thermal.temperatures_k"] = temps;
  m["thermal.n_max"] = std::to_string(thermal_n_max);
  m["cool.schedule"] = cool_schedule;
  m["cool.target_m"] = std::to_string(target_m);
  m["cool.sweep_top"] = std::to_string(sweep_top);
  m["cool.max_cycles"] = std::to_string(max_cycles);
  m["cool.target_ground"] = format_sci(target_ground);
  m["cool.initial_mean_m"] = format_sci(initial_mean_m);
  m["output.format"] = format == OutputFormat::csv ? "csv" : "json";
  m["output.path"] = output_path;
  m["output.eigenfunctions_path"] = eigenfunctions_path;
  m["output.eigenfunctions_stride"] = std::to_string(eigenfunctions_stride);
  return m;
}

}  // namespace hejc::app
