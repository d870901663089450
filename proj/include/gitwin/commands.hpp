#pragma once

#include "gitwin/config.hpp"

#include <map>
#include <string>

namespace gitwin {

/// Outcome of one CLI command: the report document plus named artifact files
/// (CSV tables, serialized certificates). Exit codes: 0 all checks passed,
/// 2 a mathematical check failed or a hypothesis was refused, 1 usage error.
struct CommandResult {
    int exit_code = 0;
    std::string report;
    std::map<std::string, std::string> artifacts;
};

CommandResult cmd_analyze(const JobConfig& cfg);
CommandResult cmd_collection(const JobConfig& cfg, bool emit_csv);
CommandResult cmd_verify(const JobConfig& cfg);
CommandResult cmd_reduce(const JobConfig& cfg);
CommandResult cmd_compose(const JobConfig& cfg);
CommandResult cmd_toric(const JobConfig& cfg);

/// Dispatch by name; unknown names yield exit code 1.
CommandResult run_command(const std::string& name, const JobConfig& cfg, bool emit_csv = false);

} // namespace gitwin
