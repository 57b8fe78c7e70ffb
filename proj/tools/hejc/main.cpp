#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "hejc/error.hpp"
#include "output.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_solver = 3;

bool has_summary_file(const std::string& command) {
  return command == "evolve" || command == "cool" || command == "validate";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hejc::app;

  CLI::App app{"hejc: electron-on-helium hybrid qubit calculations"};
  std::string command;
  std::string config_path;
  std::string out_path;
  std::string format;
  std::string preset;
  std::vector<std::string> overrides;
  int workers = 1;

  app.add_option("command", command, "spectrum|trap|drive|thermal|evolve|cool|validate")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--scenario", preset, "named preset")->check(CLI::IsMember(preset_names()));
  app.add_option("--set", overrides, "override one key, KEY=VALUE (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_config;
  }

  RunConfig cfg;
  try {
    const std::optional<std::string> preset_opt =
        preset.empty() ? std::nullopt : std::optional<std::string>(preset);
    if (!config_path.empty()) {
      cfg = load_config(config_path, preset_opt);
    } else {
      std::istringstream empty;
      cfg = parse_config(empty, preset_opt);
    }
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw hejc::ConfigError("--set expects KEY=VALUE");
      set_key(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (!format.empty()) cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (!out_path.empty()) cfg.output_path = out_path;
  } catch (const std::exception& e) {
    std::cerr << "hejc: " << e.what() << '\n';
    return exit_config;
  }

  try {
    const Document doc = run_command(command, cfg, workers);
    const std::string body = cfg.format == OutputFormat::json ? render_json(doc) : render_csv(doc);
    if (cfg.output_path.empty()) {
      std::cout << body;
    } else {
      write_atomic(cfg.output_path, body);
      if (cfg.format == OutputFormat::csv && has_summary_file(command)) {
        write_atomic(cfg.output_path + ".summary.json", render_summary_json(doc));
      }
    }
  } catch (const hejc::ConfigError& e) {
    std::cerr << "hejc: " << e.what() << '\n';
    return exit_config;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hejc: invalid input: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    std::cerr << "hejc: " << e.what() << '\n';
    return exit_solver;
  }
  return exit_ok;
}
