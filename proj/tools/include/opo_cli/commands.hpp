#pragma once

#include "opo_cli/config.hpp"

#include <iosfwd>
#include <string_view>
#include <vector>

namespace opo::cli {

enum ExitCode : int { exit_ok = 0, exit_validation = 1, exit_config = 2, exit_numerical = 3 };

inline constexpr std::string_view subcommands[] = {
    "farfield", "critical-points", "epr-scan", "epr-cut", "stokes-map", "stokes-corr", "validate"};

// Runs one subcommand. CSV goes to cfg.output or, when that is empty, to
// `out`; diagnostics go to `err`. Errors are reported on `err` and mapped
// to an exit code rather than thrown.
int run_subcommand(const RunConfig& cfg, std::string_view cmd, std::ostream& out, std::ostream& err);

// Grid builders shared with tests.
ScanGrid farfield_map(const RunConfig& cfg);
ScanGrid epr_cut(const RunConfig& cfg);

} // namespace opo::cli
