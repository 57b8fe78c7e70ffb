#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "config.hpp"
#include "output.hpp"

namespace hejc::app {

const std::vector<std::string>& command_names();

/// Runs one subcommand. Configuration problems surface as ConfigError or
/// std::invalid_argument, numerical ones as SolverError.
Document run_command(std::string_view name, const RunConfig& cfg, int workers);

/// Calls fn(0..n-1) on at most `workers` threads. The first exception (by
/// index) is rethrown after all threads finish.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

}  // namespace hejc::app
