#pragma once

#include <ostream>
#include <string>

#include "config.hpp"

namespace csswg::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kNumerical = 2 };

/// Runs one subcommand; errors propagate as exceptions.
int run_command(const std::string& command, const RunConfig& cfg, std::ostream& log);

/// Maps a library exception to the process exit code.
int exit_code_for(const std::exception& e) noexcept;

Field1D initial_profile(const RunConfig& cfg, const Grid1D& grid);

}  // namespace csswg::cli
